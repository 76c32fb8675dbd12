//! Dense univariate polynomials over the rationals, used only to compute
//! gcds and exact quotients of Laurent scalars during elimination.

use num::{BigRational, Zero};

use super::LaurentScalar;

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(Vec<BigRational>);

impl QPoly {
    fn trim(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        QPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().recip();
        QPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    /// Splits `x = q^shift * p(q)` with `p(0) != 0`.
    pub(crate) fn from_laurent(x: &LaurentScalar) -> (i32, Self) {
        let Some(lo) = x.min_exp() else {
            return (0, QPoly(Vec::new()));
        };
        let hi = x.max_exp().unwrap_or(lo);
        let mut v = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (e, c) in x.terms() {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, QPoly(v))
    }

    pub(crate) fn to_laurent(&self, shift: i32) -> LaurentScalar {
        LaurentScalar::from_terms(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i32 + shift, c.clone())),
        )
    }

    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.0.len() < d.0.len() {
            return (QPoly(Vec::new()), self.clone());
        }
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.0.len() - d.0.len() + 1];
        let inv = d.lead().recip();
        for i in (0..quot.len()).rev() {
            let c = &rem[i + d.degree()] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        (Self::trim(quot), Self::trim(rem))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

/// Monic gcd of two Laurent scalars, normalized to have lowest exponent 0.
/// Powers of `q` are units and are dropped.
pub fn laurent_gcd(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    let (_, pa) = QPoly::from_laurent(a);
    let (_, pb) = QPoly::from_laurent(b);
    if pa.is_zero() {
        return pb.monic().to_laurent(0);
    }
    pa.gcd(&pb).to_laurent(0)
}

/// Exact quotient `a / d`; `None` when `d` does not divide `a`.
pub fn laurent_div_exact(a: &LaurentScalar, d: &LaurentScalar) -> Option<LaurentScalar> {
    let (sa, pa) = QPoly::from_laurent(a);
    let (sd, pd) = QPoly::from_laurent(d);
    if pd.is_zero() {
        return None;
    }
    let (quot, rem) = pa.div_rem(&pd);
    rem.is_zero().then(|| quot.to_laurent(sa - sd))
}

pub fn laurent_lcm(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    let g = laurent_gcd(a, b);
    if g.is_zero() {
        return LaurentScalar::zero();
    }
    let prod = a * b;
    let l = laurent_div_exact(&prod, &g).expect("gcd divides the product");
    // strip the q-power so the lcm is normalized like the gcd
    let shift = l.min_exp().unwrap_or(0);
    l.shift(-shift)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentScalar {
        LaurentScalar::from_terms(
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from_integer(c.into()))),
        )
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (q - 1)(q + 2) and q^-3 (q - 1)(q - 5)
        let a = lp(&[(2, 1), (1, 1), (0, -2)]);
        let b = lp(&[(-1, 1), (-2, -6), (-3, 5)]);
        assert_eq!(laurent_gcd(&a, &b), lp(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn exact_division_and_remainder() {
        let a = lp(&[(3, 1), (1, -1)]); // q^3 - q = q (q-1)(q+1)
        let d = lp(&[(0, 1), (1, 1)]);
        assert_eq!(laurent_div_exact(&a, &d).unwrap(), lp(&[(2, 1), (1, -1)]));
        assert!(laurent_div_exact(&a, &lp(&[(1, 1), (0, 2)])).is_none());
    }

    #[test]
    fn lcm_is_divisible_by_both() {
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(2, 1), (0, -1)]);
        let l = laurent_lcm(&a, &b);
        assert!(laurent_div_exact(&l, &a).is_some());
        assert!(laurent_div_exact(&l, &b).is_some());
        assert_eq!(l.max_exp(), Some(2));
    }
}
