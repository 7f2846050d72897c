//! Pointwise activation functions.
//!
//! Every kind here is non-decreasing: `u <= v` implies `phi(u) <= phi(v)`.
//! That is the only property the monotonicity certificates rely on, and it
//! is what makes a non-negative-weight network an order-preserving map.

use crate::scalar::Scalar;

/// Scalar activation kind, applied pointwise to layer outputs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Activation {
    Relu,
    /// `u` for `u >= 0`, `slope * u` otherwise. Requires `slope > 0`, which
    /// keeps the function non-decreasing.
    LeakyRelu { slope: f64 },
    Sigmoid,
    Tanh,
    Identity,
}

impl Activation {
    pub const DEFAULT_LEAKY_SLOPE: f64 = 0.01;

    pub fn leaky_relu() -> Self {
        Activation::LeakyRelu {
            slope: Self::DEFAULT_LEAKY_SLOPE,
        }
    }

    /// Evaluates `phi(u)`. Total on finite inputs.
    pub fn eval<F: Scalar>(self, u: F) -> F {
        match self {
            Activation::Relu => {
                if u < F::zero() {
                    F::zero()
                } else {
                    u
                }
            }
            Activation::LeakyRelu { slope } => {
                if u < F::zero() {
                    F::lit(slope) * u
                } else {
                    u
                }
            }
            Activation::Sigmoid => F::one() / (F::one() + (-u).exp()),
            Activation::Tanh => u.tanh(),
            Activation::Identity => u,
        }
    }

    /// Derivative with respect to the preactivation. At the relu-family
    /// kink (`u == 0`) the negative-side slope is used: 0 for relu, `slope`
    /// for leaky relu.
    pub fn grad<F: Scalar>(self, u: F) -> F {
        match self {
            Activation::Relu => {
                if u > F::zero() {
                    F::one()
                } else {
                    F::zero()
                }
            }
            Activation::LeakyRelu { slope } => {
                if u > F::zero() {
                    F::one()
                } else {
                    F::lit(slope)
                }
            }
            Activation::Sigmoid => {
                let s = self.eval(u);
                s * (F::one() - s)
            }
            Activation::Tanh => {
                let t = u.tanh();
                F::one() - t * t
            }
            Activation::Identity => F::one(),
        }
    }

    /// True for every kind with valid parameters; a non-positive leaky
    /// slope would break monotonicity and is rejected here.
    pub fn is_non_decreasing(self) -> bool {
        match self {
            Activation::LeakyRelu { slope } => slope > 0.0,
            _ => true,
        }
    }

    /// Exact identity on the non-negative half-line? Used by the skip
    /// rewrite to decide whether a dummy unit passes a value through.
    pub fn is_identity_on_nonneg(self) -> bool {
        matches!(
            self,
            Activation::Relu | Activation::LeakyRelu { .. } | Activation::Identity
        )
    }

    /// Outputs are always `>= 0`? (Used to certify carried skip values.)
    pub fn output_non_negative(self) -> bool {
        matches!(self, Activation::Relu | Activation::Sigmoid)
    }

    pub fn name(self) -> &'static str {
        match self {
            Activation::Relu => "relu",
            Activation::LeakyRelu { .. } => "leaky_relu",
            Activation::Sigmoid => "sigmoid",
            Activation::Tanh => "tanh",
            Activation::Identity => "identity",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    const ALL: [Activation; 5] = [
        Activation::Relu,
        Activation::LeakyRelu { slope: 0.01 },
        Activation::Sigmoid,
        Activation::Tanh,
        Activation::Identity,
    ];

    #[test]
    fn relu_clamps_negatives() {
        assert_eq!(Activation::Relu.eval(-2.0), 0.0);
        assert_eq!(Activation::Relu.eval(3.5), 3.5);
    }

    #[test]
    fn sigmoid_at_zero_is_half() {
        assert_eq!(Activation::Sigmoid.eval(0.0), 0.5);
    }

    #[test]
    fn tanh_is_odd_at_zero() {
        assert_eq!(Activation::Tanh.eval(0.0), 0.0);
    }

    #[test]
    fn leaky_uses_slope_below_zero() {
        let a = Activation::LeakyRelu { slope: 0.1 };
        assert!((a.eval(-2.0) - (-0.2)).abs() < 1e-15);
        assert_eq!(a.eval(2.0), 2.0);
    }

    #[test]
    fn saturated_inputs_stay_finite() {
        for act in ALL {
            for u in [-1e6, 1e6, -750.0, 750.0] {
                assert!(act.eval(u).is_finite(), "{:?}({u})", act);
            }
        }
    }

    // 10^5 random ordered pairs per kind: phi(u) <= phi(v) exactly.
    #[test]
    fn every_kind_is_non_decreasing() {
        let mut rng = Rng::new(99);
        for act in ALL {
            assert!(act.is_non_decreasing());
            for _ in 0..100_000 {
                let a: f64 = rng.uniform(-40.0, 40.0);
                let b: f64 = rng.uniform(-40.0, 40.0);
                let (u, v) = if a <= b { (a, b) } else { (b, a) };
                assert!(
                    act.eval(u) <= act.eval(v),
                    "{:?} not monotone at ({u}, {v})",
                    act
                );
            }
        }
    }

    #[test]
    fn gradient_matches_central_differences_away_from_kinks() {
        let mut rng = Rng::new(3);
        let h = 1e-6;
        for act in ALL {
            for _ in 0..200 {
                let mut u: f64 = rng.uniform(-4.0, 4.0);
                if u.abs() < 1e-3 {
                    u += 0.1; // keep clear of the relu kink
                }
                let fd = (act.eval(u + h) - act.eval(u - h)) / (2.0 * h);
                let g = act.grad(u);
                assert!(
                    (fd - g).abs() <= 1e-6 * fd.abs().max(g.abs()).max(1.0),
                    "{:?} grad {g} vs fd {fd} at {u}",
                    act
                );
            }
        }
    }
}
