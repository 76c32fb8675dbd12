use std::collections::BTreeMap;

use super::minor::quantum_det;
use crate::coeff::LaurentScalar;
use crate::error::QgrError;
use crate::qmatrix::{Level, NCPoly, TensorPoly, Word};

/// Whether `x` lies in the two-sided ideal generated by `D_full - 1`.
///
/// With `x = (D - 1) z` and `N = deg D`, the graded pieces satisfy
/// `z_d = D z_{d-N} - x_d`; `x` is a member iff the top `N` pieces of `z`
/// vanish.
pub fn sl_ideal_membership(x: &NCPoly) -> bool {
    let Some(top) = x.max_degree() else {
        return true;
    };
    let level = x.level();
    let d_full = quantum_det(level);
    let n = level.size();
    let parts = x.homogeneous_parts();
    let mut z: Vec<NCPoly> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let mut zd = if d >= n {
            &d_full * &z[d - n]
        } else {
            NCPoly::zero(level)
        };
        if let Some(xd) = parts.get(&d) {
            zd = &zd - xd;
        }
        z.push(zd);
    }
    z[(top + 1).saturating_sub(n)..].iter().all(NCPoly::is_zero)
}

/// A representative of a class in `k_q[SL_{m,n}] = k_q[a_ij] / (D_full - 1)`.
#[derive(Clone, Debug)]
pub struct SlElement {
    rep: NCPoly,
}

impl SlElement {
    pub fn new(rep: NCPoly) -> Self {
        Self { rep }
    }

    pub fn rep(&self) -> &NCPoly {
        &self.rep
    }

    pub fn level(&self) -> Level {
        self.rep.level()
    }
}

pub fn sl_equal(x: &SlElement, y: &SlElement) -> Result<bool, QgrError> {
    Ok(sl_ideal_membership(&x.rep.try_sub(&y.rep)?))
}

/// Multiplies each word in factor `i` by the power of `D_full` that lifts it
/// to the top degree of its residue class mod `N`. Distinct classes cannot
/// cancel afterwards, so the result vanishes iff the input lies in the sum
/// of the `D - 1` ideals of the flagged factors.
fn homogenize(t: &TensorPoly, sl: &[bool]) -> TensorPoly {
    let levels = t.levels().to_vec();
    let sizes: Vec<usize> = levels.iter().map(Level::size).collect();
    let residue = |ws: &[Word]| -> Vec<usize> {
        ws.iter()
            .enumerate()
            .map(|(i, w)| if sl[i] { w.len() % sizes[i] } else { usize::MAX })
            .collect()
    };
    let mut tops: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for ws in t.terms().keys() {
        let entry = tops.entry(residue(ws)).or_insert_with(|| vec![0; ws.len()]);
        for (i, w) in ws.iter().enumerate() {
            entry[i] = entry[i].max(w.len());
        }
    }
    let mut det_powers: Vec<BTreeMap<usize, NCPoly>> = vec![BTreeMap::new(); levels.len()];
    let mut out = TensorPoly::zero(levels.clone());
    for (ws, c) in t.terms() {
        let top = &tops[&residue(ws)];
        let factors: Vec<NCPoly> = ws
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let word = NCPoly::from_normal_terms(
                    levels[i],
                    BTreeMap::from([(w.clone(), LaurentScalar::one())]),
                );
                if !sl[i] {
                    return word;
                }
                let k = (top[i] - w.len()) / sizes[i];
                let power = det_powers[i]
                    .entry(k)
                    .or_insert_with(|| quantum_det(levels[i]).pow(k as u32));
                &*power * &word
            })
            .collect();
        out = out
            .try_add(&TensorPoly::outer_many(&factors).scale(c))
            .expect("same levels");
    }
    out
}

/// Membership of a tensor in the ideal generated by `D_full - 1` placed in
/// each factor flagged in `sl`.
pub fn tensor_in_sl_ideal(t: &TensorPoly, sl: &[bool]) -> bool {
    assert_eq!(sl.len(), t.arity(), "one flag per tensor factor");
    homogenize(t, sl).is_zero()
}

/// Equality of tensors with the flagged factors read in the SL quotient.
pub fn tensor_sl_equal(x: &TensorPoly, y: &TensorPoly, sl: &[bool]) -> Result<bool, QgrError> {
    Ok(tensor_in_sl_ideal(&x.try_sub(y)?, sl))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(m: i32, n: i32) -> Level {
        Level::new(m, n).unwrap()
    }

    #[test]
    fn membership_examples() {
        let l = lvl(1, 1);
        let d = quantum_det(l);
        let one = NCPoly::one(l);
        assert!(sl_ideal_membership(&(&d - &one)));
        assert!(sl_ideal_membership(&(&(&d * &d) - &one)));
        assert!(!sl_ideal_membership(&NCPoly::gen(l, -1, -1).unwrap()));
        assert!(sl_ideal_membership(&NCPoly::zero(l)));
        assert!(!sl_ideal_membership(&one));
        let a = NCPoly::gen(l, -1, 0).unwrap();
        assert!(sl_ideal_membership(&(&(&a * &d) - &a)));
    }

    #[test]
    fn sl_equal_examples() {
        let l = lvl(1, 1);
        let d = SlElement::new(quantum_det(l));
        let one = SlElement::new(NCPoly::one(l));
        assert!(sl_equal(&d, &one).unwrap());
        let a = SlElement::new(NCPoly::gen(l, -1, -1).unwrap());
        let b = SlElement::new(NCPoly::gen(l, 0, 0).unwrap());
        assert!(sl_equal(&a, &a).unwrap());
        assert!(!sl_equal(&a, &b).unwrap());
        let other = SlElement::new(NCPoly::one(lvl(1, 2)));
        assert!(sl_equal(&one, &other).is_err());
    }

    #[test]
    fn tensor_membership_matches_greedy_on_single_factor() {
        let l = lvl(1, 1);
        let d = quantum_det(l);
        let a = NCPoly::gen(l, 0, -1).unwrap();
        let samples = [
            &d - &NCPoly::one(l),
            &(&a * &d) - &a,
            &(&a * &d) - &(&a * &a),
            a.clone(),
            &(&d * &d) - &d,
        ];
        for x in &samples {
            assert_eq!(
                tensor_in_sl_ideal(&TensorPoly::from_poly(x), &[true]),
                sl_ideal_membership(x),
                "{x}"
            );
        }
    }

    #[test]
    fn tensor_membership_two_factors() {
        let l = lvl(1, 1);
        let d = quantum_det(l);
        let one = NCPoly::one(l);
        let a = NCPoly::gen(l, -1, 0).unwrap();
        let lhs = TensorPoly::outer(&d, &a);
        let rhs = TensorPoly::outer(&one, &a);
        assert!(tensor_sl_equal(&lhs, &rhs, &[true, false]).unwrap());
        assert!(!tensor_sl_equal(&lhs, &rhs, &[false, true]).unwrap());
        let both = TensorPoly::outer(&d, &d);
        assert!(tensor_sl_equal(&both, &TensorPoly::unit(vec![l, l]), &[true, true]).unwrap());
        assert!(!tensor_sl_equal(&both, &TensorPoly::unit(vec![l, l]), &[true, false]).unwrap());
    }
}
