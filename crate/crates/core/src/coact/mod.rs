//! Coactions of the quantum SL levels: the left coaction `λ` on the
//! rectangular algebra and the Grassmannian (restriction of the matrix
//! comultiplication), the right coaction `ρ` of `SL_{m,0}`, coinvariants,
//! and the commuting squares between levels.

use std::collections::BTreeMap;

use crate::coeff::{LaurentScalar, ScalarMatrix};
use crate::error::QgrError;
use crate::grassmann::{e_project_generator, eval_embed, minor_generators, MinorExpr};
use crate::limits::{rho_project, LimitElement};
use crate::qmatrix::{
    comul, comul_factor, counit_factor, level_project_e, projection_image, substitute, Gen,
    GenImage, Level, NCPoly, TensorPoly, Word,
};
use crate::qsl::{quantum_det, quantum_minor, sl_ideal_membership, tensor_sl_equal, MinorKey};
use crate::report::CheckReport;

/// A two-factor tensor in which the flagged factors are read modulo
/// `D_full - 1`.
#[derive(Clone, Debug)]
pub struct CoactionValue {
    pub tensor: TensorPoly,
    pub sl: [bool; 2],
}

impl CoactionValue {
    pub fn sl_equal(&self, other: &CoactionValue) -> Result<bool, QgrError> {
        if self.sl != other.sl {
            return Ok(false);
        }
        tensor_sl_equal(&self.tensor, &other.tensor, &self.sl)
    }
}

fn require_rect(level: Level) -> Result<(), QgrError> {
    if level == level.as_rect() {
        Ok(())
    } else {
        Err(QgrError::LevelMismatch {
            left: level,
            right: level.as_rect(),
        })
    }
}

/// `λ(a_ij) = Σ_k g_ik ⊗ a_kj` on the rectangular algebra; the left factor
/// is `SL_{m,n}`.
pub fn left_coaction(x: &NCPoly) -> Result<CoactionValue, QgrError> {
    require_rect(x.level())?;
    Ok(CoactionValue {
        tensor: comul(x)?,
        sl: [true, false],
    })
}

pub fn left_coaction_minor(x: &MinorExpr) -> Result<CoactionValue, QgrError> {
    left_coaction(&eval_embed(x))
}

/// The acting group's level for the right coaction: `SL_{m,0}`.
pub fn right_group_level(level: Level) -> Level {
    Level::new(level.m(), 0).expect("m >= 1")
}

fn right_generator(level: Level, group: Level, g: Gen) -> TensorPoly {
    let mut t = TensorPoly::zero(vec![level, group]);
    for k in -level.m()..0 {
        let term = TensorPoly::pure(
            vec![level, group],
            vec![
                Word::new(vec![Gen::new(g.row, k)]),
                Word::new(vec![Gen::new(k, g.col)]),
            ],
            LaurentScalar::one(),
        );
        t = t.try_add(&term).expect("same levels");
    }
    t
}

/// `ρ(b_ij) = Σ_{k=-m}^{-1} b_ik ⊗ g_kj` with `g` in `SL_{m,0}`.
pub fn right_coaction(x: &NCPoly) -> Result<CoactionValue, QgrError> {
    let level = x.level();
    require_rect(level)?;
    let group = right_group_level(level);
    let tensor = TensorPoly::algebra_image(x, vec![level, group], |g| {
        Ok(right_generator(level, group, g))
    })?;
    Ok(CoactionValue {
        tensor,
        sl: [false, true],
    })
}

/// Whether `ρ(x) - x ⊗ 1` has every `SL_{m,0}` coefficient in the ideal.
pub fn is_coinvariant(x: &NCPoly) -> Result<bool, QgrError> {
    let rho = right_coaction(x)?.tensor;
    let group = right_group_level(x.level());
    let diff = rho.try_sub(&TensorPoly::outer(x, &NCPoly::one(group)))?;
    Ok(diff
        .coefficients_of_factor(1)
        .values()
        .all(sl_ideal_membership))
}

/// Sorted words of length `d` over `gens`.
fn monomials(gens: &[Gen], d: usize) -> Vec<Word> {
    fn go(gens: &[Gen], start: usize, d: usize, cur: &mut Vec<Gen>, out: &mut Vec<Word>) {
        if d == 0 {
            out.push(Word::new(cur.clone()));
            return;
        }
        for i in start..gens.len() {
            cur.push(gens[i]);
            go(gens, i, d - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(gens, 0, d, &mut Vec::new(), &mut out);
    out
}

/// A basis of the coinvariants of word length `d` in the rectangular
/// algebra. A homogeneous `x` of length `d = r m` is coinvariant iff
/// `ρ(x) = x ⊗ D_full^r` exactly; lengths not divisible by `m` have none.
pub fn coinvariant_basis(level: Level, d: usize) -> Result<Vec<NCPoly>, QgrError> {
    let level = level.as_rect();
    let m = level.m() as usize;
    if !d.is_multiple_of(m) {
        return Ok(Vec::new());
    }
    let group = right_group_level(level);
    let det_power = quantum_det(group).pow((d / m) as u32);
    let basis = monomials(&level.generators(), d);
    let mut index: BTreeMap<Vec<Word>, usize> = BTreeMap::new();
    let mut columns: Vec<BTreeMap<usize, LaurentScalar>> = Vec::with_capacity(basis.len());
    for w in &basis {
        let x = NCPoly::from_words(level, [(w.letters().to_vec(), LaurentScalar::one())])?;
        let residual = right_coaction(&x)?
            .tensor
            .try_sub(&TensorPoly::outer(&x, &det_power))?;
        let mut col = BTreeMap::new();
        for (ws, c) in residual.terms() {
            let next = index.len();
            let row = *index.entry(ws.clone()).or_insert(next);
            col.insert(row, c.clone());
        }
        columns.push(col);
    }
    let dense = columns
        .into_iter()
        .map(|col| {
            let mut v = vec![LaurentScalar::zero(); index.len()];
            for (r, c) in col {
                v[r] = c;
            }
            v
        })
        .collect();
    let matrix = ScalarMatrix::from_columns(index.len(), dense)?;
    Ok(matrix
        .kernel_basis()
        .into_iter()
        .map(|v| {
            NCPoly::from_words(
                level,
                basis
                    .iter()
                    .zip(v)
                    .map(|(w, c)| (w.letters().to_vec(), c)),
            )
            .expect("basis words lie in the level")
        })
        .collect())
}

/// Rank of a family of polynomials over the fraction field.
pub fn span_rank(polys: &[NCPoly]) -> usize {
    let mut index: BTreeMap<&Word, usize> = BTreeMap::new();
    for p in polys {
        for w in p.terms().keys() {
            let next = index.len();
            index.entry(w).or_insert(next);
        }
    }
    let columns = polys
        .iter()
        .map(|p| {
            let mut v = vec![LaurentScalar::zero(); index.len()];
            for (w, c) in p.terms() {
                v[index[w]] = c.clone();
            }
            v
        })
        .collect();
    ScalarMatrix::from_columns(index.len(), columns)
        .expect("uniform columns")
        .rank()
}

/// Quantum Cauchy–Binet: `λ(D_I) = Σ_K D^g_{I,K} ⊗ D_K` over increasing
/// `K`. Returns the row sets where it fails.
pub fn cauchy_binet_check(level: Level) -> Result<Vec<String>, QgrError> {
    let rect = level.as_rect();
    let full = rect.as_full();
    let mut bad = Vec::new();
    for rows in minor_generators(rect) {
        let lhs = left_coaction_minor(&MinorExpr::generator(rect, rows.clone())?)?.tensor;
        let mut rhs = TensorPoly::zero(vec![full, rect]);
        for k in minor_generators(rect) {
            let g = quantum_minor(&MinorKey::new(full, rows.clone(), k.clone())?);
            let d = quantum_minor(&MinorKey::leading(rect, k)?);
            rhs = rhs.try_add(&TensorPoly::outer(&g, &d))?;
        }
        if lhs != rhs {
            bad.push(format!("{rows:?}"));
        }
    }
    Ok(bad)
}

/// Every product of at most `max_factors` maximal minors satisfies
/// `ρ(x) = x ⊗ D_full^r` exactly and is coinvariant. Returns failures.
pub fn minor_products_coinvariance(level: Level, max_factors: usize) -> Result<Vec<String>, QgrError> {
    let level = level.as_rect();
    let group = right_group_level(level);
    let mut bad = Vec::new();
    for r in 0..=max_factors {
        let det_power = quantum_det(group).pow(r as u32);
        for w in crate::grassmann::minor_words(level, r) {
            let expr = MinorExpr::from_words(level, [(w.clone(), LaurentScalar::one())])?;
            let x = eval_embed(&expr);
            let exact = right_coaction(&x)?.tensor == TensorPoly::outer(&x, &det_power);
            if !exact || !is_coinvariant(&x)? {
                bad.push(w.to_string());
            }
        }
    }
    Ok(bad)
}

fn sample_elements(level: Level) -> Vec<NCPoly> {
    let gens = level.generators();
    let mut out: Vec<NCPoly> = gens
        .iter()
        .map(|g| NCPoly::gen(level, g.row, g.col).expect("generator"))
        .collect();
    for &g in &gens {
        for &h in &gens {
            out.push(NCPoly::normalize(level, &[g, h], LaurentScalar::one()).expect("generators"));
        }
    }
    out
}

/// Coassociativity and counit laws for `λ` and `ρ` on generators and all
/// degree-2 products at `level`.
pub fn coaction_axioms_check(level: Level) -> Result<CheckReport, QgrError> {
    let level = level.as_rect();
    let mut report = CheckReport::new("coaction axioms", level.to_string());
    let samples = sample_elements(level);

    let (mut coassoc, mut unit) = (Vec::new(), Vec::new());
    for x in &samples {
        let t = left_coaction(x)?.tensor;
        let outer = comul_factor(&t, 0)?;
        let inner = comul_factor(&t, 1)?;
        if outer != inner && !tensor_sl_equal(&outer, &inner, &[true, true, false])? {
            coassoc.push(x.to_string());
        }
        if counit_factor(&t, 0)?.into_poly() != *x {
            unit.push(x.to_string());
        }
    }
    report.record("left coassociativity", coassoc);
    report.record("left counit", unit);

    let group = right_group_level(level);
    let (mut coassoc, mut unit) = (Vec::new(), Vec::new());
    for x in &samples {
        let t = right_coaction(x)?.tensor;
        let outer = t.expand_factor(0, &[level, group], |w| {
            let p = NCPoly::from_words(level, [(w.letters().to_vec(), LaurentScalar::one())])?;
            Ok(right_coaction(&p)?.tensor)
        })?;
        let inner = comul_factor(&t, 1)?;
        if outer != inner && !tensor_sl_equal(&outer, &inner, &[false, true, true])? {
            coassoc.push(x.to_string());
        }
        if counit_factor(&t, 1)?.into_poly() != *x {
            unit.push(x.to_string());
        }
    }
    report.record("right coassociativity", coassoc);
    report.record("right counit", unit);
    Ok(report)
}

/// Which φ to use on the group factor of the coaction square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiVariant {
    Standard,
    /// Sends the padded diagonal to 0 instead of 1; a negative control.
    Corrupted,
}

/// `(φ ⊗ e) ∘ λ_high = λ_low ∘ e` on every Grassmannian generator of
/// `from`, with the group factor compared in `SL`.
pub fn coaction_square_check(from: Level, to: Level, phi: PhiVariant) -> Result<Vec<String>, QgrError> {
    let (from, to) = (from.as_rect(), to.as_rect());
    from.require_dominates(&to)?;
    let (full_to, full_from) = (to.as_full(), from.as_full());
    let standard = projection_image(full_to);
    let phi_image = move |g: Gen| match (phi, standard(g)) {
        (PhiVariant::Corrupted, GenImage::One) => GenImage::Zero,
        (_, image) => image,
    };
    let mut bad = Vec::new();
    for rows in minor_generators(from) {
        let x = MinorExpr::generator(from, rows.clone())?;
        let lhs = left_coaction_minor(&x)?
            .tensor
            .map_factor(0, full_to, |w| {
                substitute(&crate::qsl::word_poly(full_from, w), full_to, &phi_image)
            })?
            .map_factor(1, to, |w| {
                level_project_e(
                    &NCPoly::from_words(from, [(w.letters().to_vec(), LaurentScalar::one())])?,
                    to,
                )
            })?;
        let low = match e_project_generator(from, to, &rows) {
            Some(r) => MinorExpr::generator(to, r)?,
            None => MinorExpr::zero(to),
        };
        let rhs = left_coaction_minor(&low)?.tensor;
        if !tensor_sl_equal(&lhs, &rhs, &[true, false])? {
            bad.push(format!("{rows:?}"));
        }
    }
    Ok(bad)
}

/// `λ` applied to the level slice of a direct-limit element.
pub fn limit_coaction_slice(x: &LimitElement, level: Level) -> Result<CoactionValue, QgrError> {
    let level = level.as_rect();
    let need = x.dominating_level();
    if level.m() < need.m() || level.n() < need.n() {
        return Err(QgrError::LevelTooSmall { level });
    }
    left_coaction_minor(&rho_project(x, level))
}
