use super::antipode::{antipode, antipode_generator, AntipodeConvention};
use super::minor::quantum_det;
use super::quotient::{sl_equal, sl_ideal_membership, tensor_sl_equal, SlElement};
use crate::error::QgrError;
use crate::qmatrix::{
    comul, comul_factor, counit, counit_factor, level_project_e, Gen, Level, NCPoly, TensorPoly,
};
use crate::report::CheckReport;

/// The φ-map between SL levels. On square levels it is the E-map read
/// through the quotient.
pub fn phi_project(x: &SlElement, to: Level) -> Result<SlElement, QgrError> {
    Ok(SlElement::new(level_project_e(x.rep(), to)?))
}

fn sum_over_k<F>(level: Level, mut f: F) -> NCPoly
where
    F: FnMut(i32) -> NCPoly,
{
    level
        .rows()
        .fold(NCPoly::zero(level), |acc, k| &acc + &f(k))
}

/// Verifies the bialgebra axioms on generators, grouplikeness of `D_full`
/// and both pre-quotient antipode identities `Σ_k S(a_ik) a_kj = δ_ij D_full`
/// and `Σ_k a_ik S(a_kj) = δ_ij D_full`.
pub fn hopf_check(level: Level, conv: AntipodeConvention) -> Result<CheckReport, QgrError> {
    let level = level.as_full();
    let mut report = CheckReport::new("hopf", level.to_string());
    let gens = level.generators();
    let a = |g: Gen| NCPoly::gen(level, g.row, g.col).expect("generator of the level");

    let mut bad = Vec::new();
    for &g in &gens {
        let d = comul(&a(g))?;
        if comul_factor(&d, 0)? != comul_factor(&d, 1)? {
            bad.push(g.to_string());
        }
    }
    report.record("coassociativity", bad);

    let mut bad = Vec::new();
    for &g in &gens {
        let d = comul(&a(g))?;
        let left = counit_factor(&d, 0)?.into_poly();
        let right = counit_factor(&d, 1)?.into_poly();
        if left != a(g) || right != a(g) {
            bad.push(g.to_string());
        }
    }
    report.record("counit", bad);

    let det = quantum_det(level);
    let grouplike = comul(&det)? == TensorPoly::outer(&det, &det);
    report.record(
        "det grouplike",
        if grouplike { vec![] } else { vec!["D_full".into()] },
    );
    report.record(
        "det counit",
        if counit(&det).is_one() { vec![] } else { vec!["D_full".into()] },
    );

    let s = |g: Gen| antipode_generator(level, g, conv);
    let mut left_bad = Vec::new();
    let mut right_bad = Vec::new();
    for i in level.rows() {
        for j in level.cols() {
            let expected = if i == j { det.clone() } else { NCPoly::zero(level) };
            let left = sum_over_k(level, |k| &s(Gen::new(i, k)) * &a(Gen::new(k, j)));
            let right = sum_over_k(level, |k| &a(Gen::new(i, k)) * &s(Gen::new(k, j)));
            if left != expected {
                left_bad.push(format!("({i},{j})"));
            }
            if right != expected {
                right_bad.push(format!("({i},{j})"));
            }
        }
    }
    report.record("antipode left", left_bad);
    report.record("antipode right", right_bad);
    Ok(report)
}

/// The squares saying φ is a map of Hopf algebras: `φ(D_full) = 1`,
/// `Δ∘φ = (φ⊗φ)∘Δ`, `ε∘φ = ε` and `φ∘S = S∘φ`, on every generator of
/// `from`, with equality in the SL quotients.
pub fn hopf_squares_check(from: Level, to: Level) -> Result<CheckReport, QgrError> {
    let (from, to) = (from.as_full(), to.as_full());
    from.require_dominates(&to)?;
    let conv = AntipodeConvention::Transposed;
    let mut report = CheckReport::new("squares", format!("{from}->{to}"));
    let phi = |x: &NCPoly| level_project_e(x, to);

    let det_image = phi(&quantum_det(from))?;
    report.record(
        "phi well-defined",
        if sl_ideal_membership(&(&det_image - &NCPoly::one(to))) {
            vec![]
        } else {
            vec!["D_full".into()]
        },
    );

    let (mut comul_bad, mut counit_bad, mut antipode_bad) = (Vec::new(), Vec::new(), Vec::new());
    for g in from.generators() {
        let x = NCPoly::gen(from, g.row, g.col)?;
        let image = phi(&x)?;

        let lhs = comul(&image)?;
        let rhs = comul(&x)?
            .map_factor(0, to, |w| phi(&word_poly(from, w)))?
            .map_factor(1, to, |w| phi(&word_poly(from, w)))?;
        if !tensor_sl_equal(&lhs, &rhs, &[true, true])? {
            comul_bad.push(g.to_string());
        }

        if counit(&image) != counit(&x) {
            counit_bad.push(g.to_string());
        }

        let lhs = SlElement::new(phi(&antipode(&x, conv)?)?);
        let rhs = SlElement::new(antipode(&image, conv)?);
        if !sl_equal(&lhs, &rhs)? {
            antipode_bad.push(g.to_string());
        }
    }
    report.record("comul square", comul_bad);
    report.record("counit square", counit_bad);
    report.record("antipode square", antipode_bad);
    Ok(report)
}

/// `E_{a→c} = E_{b→c} ∘ E_{a→b}` on every generator of `a`.
pub fn projection_compose_check(a: Level, b: Level, c: Level) -> Result<Vec<String>, QgrError> {
    a.require_dominates(&b)?;
    b.require_dominates(&c)?;
    let mut bad = Vec::new();
    for g in a.generators() {
        let x = NCPoly::gen(a, g.row, g.col)?;
        if level_project_e(&x, c)? != level_project_e(&level_project_e(&x, b)?, c)? {
            bad.push(g.to_string());
        }
    }
    Ok(bad)
}

pub(crate) fn word_poly(level: Level, w: &crate::qmatrix::Word) -> NCPoly {
    NCPoly::from_words(level, [(w.letters().to_vec(), crate::coeff::LaurentScalar::one())])
        .expect("word from the level")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(m: i32, n: i32) -> Level {
        Level::new(m, n).unwrap()
    }

    #[test]
    fn hopf_small_levels() {
        for l in [lvl(1, 1), lvl(1, 2), lvl(2, 1), lvl(1, 0)] {
            let r = hopf_check(l, AntipodeConvention::Transposed).unwrap();
            assert!(r.pass, "{l}: {:?}", r.witnesses());
        }
    }

    #[test]
    fn literal_convention_fails() {
        let r = hopf_check(lvl(1, 1), AntipodeConvention::Literal).unwrap();
        assert!(!r.pass);
        assert!(!r.item("antipode left").unwrap().pass);
    }

    #[test]
    fn phi_examples() {
        let (hi, lo) = (lvl(2, 2), lvl(1, 1));
        let g = |i, j| SlElement::new(NCPoly::gen(hi, i, j).unwrap());
        assert_eq!(phi_project(&g(-2, -2), lo).unwrap().rep(), &NCPoly::one(lo));
        assert_eq!(
            phi_project(&g(-1, 0), lo).unwrap().rep(),
            &NCPoly::gen(lo, -1, 0).unwrap()
        );
        assert!(phi_project(&g(-2, 0), lo).unwrap().rep().is_zero());
    }

    #[test]
    fn squares_small() {
        let r = hopf_squares_check(lvl(2, 2), lvl(1, 1)).unwrap();
        assert!(r.pass, "{:?}", r.witnesses());
        assert!(hopf_squares_check(lvl(1, 1), lvl(2, 2)).is_err());
    }

    #[test]
    fn projections_compose() {
        assert!(projection_compose_check(lvl(3, 3), lvl(2, 2), lvl(1, 1))
            .unwrap()
            .is_empty());
    }
}
