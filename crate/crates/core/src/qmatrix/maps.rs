use super::level::{Gen, Level};
use super::poly::NCPoly;
use super::rewrite::{self, Terms};
use super::tensor::TensorPoly;
use crate::coeff::LaurentScalar;
use crate::error::QgrError;

/// Image of a single generator under a substitution map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenImage {
    Gen(Gen),
    One,
    Zero,
}

/// Applies the algebra map sending each generator to a generator, 1 or 0,
/// and renormalizes at `target`.
pub fn substitute<F>(x: &NCPoly, target: Level, image: F) -> Result<NCPoly, QgrError>
where
    F: Fn(Gen) -> GenImage,
{
    let mut acc = Terms::new();
    'words: for (w, c) in x.terms() {
        let mut letters = Vec::with_capacity(w.len());
        for &g in w.letters() {
            match image(g) {
                GenImage::Gen(h) => {
                    if !target.contains(h) {
                        return Err(QgrError::IndexOutOfRange {
                            row: h.row,
                            col: h.col,
                            level: target,
                        });
                    }
                    letters.push(h)
                }
                GenImage::One => {}
                GenImage::Zero => continue 'words,
            }
        }
        rewrite::mul_into(&mut acc, &[], &letters, c);
    }
    Ok(NCPoly::from_terms(target, acc))
}

/// The level-projection substitution: generators inside `to` are kept,
/// diagonal generators outside its row window go to 1, the rest to 0.
pub fn projection_image(to: Level) -> impl Fn(Gen) -> GenImage {
    move |g| {
        if to.contains(g) {
            GenImage::Gen(g)
        } else if g.row == g.col && !to.rows().contains(&g.row) {
            GenImage::One
        } else {
            GenImage::Zero
        }
    }
}

/// The E-map from `x.level()` down to `to`.
pub fn level_project_e(x: &NCPoly, to: Level) -> Result<NCPoly, QgrError> {
    x.level().require_dominates(&to)?;
    substitute(x, to, projection_image(to))
}

/// Comultiplication `a_ij ↦ Σ_k a_ik ⊗ a_kj`, extended as an algebra map.
///
/// For a rectangular level the left factor lives in the square algebra of
/// the same level, which is how the left coaction on `k_q[b_ij]` arises.
pub fn comul(x: &NCPoly) -> Result<TensorPoly, QgrError> {
    let right = x.level();
    let left = right.as_full();
    TensorPoly::algebra_image(x, vec![left, right], |g| Ok(comul_generator(left, right, g)))
}

pub(crate) fn comul_generator(left: Level, right: Level, g: Gen) -> TensorPoly {
    let mut t = TensorPoly::zero(vec![left, right]);
    for k in right.rows() {
        t.add_term(
            vec![
                super::Word::new(vec![Gen::new(g.row, k)]),
                super::Word::new(vec![Gen::new(k, g.col)]),
            ],
            LaurentScalar::one(),
        );
    }
    t
}

/// Counit: the multiplicative extension of `a_ij ↦ δ_ij`.
pub fn counit(x: &NCPoly) -> LaurentScalar {
    let mut acc = LaurentScalar::zero();
    for (w, c) in x.terms() {
        if w.letters().iter().all(|g| g.row == g.col) {
            acc += c;
        }
    }
    acc
}

/// Applies the counit to factor `i` of a tensor, lowering its arity by one.
pub fn counit_factor(t: &TensorPoly, i: usize) -> Result<TensorPoly, QgrError> {
    t.expand_factor(i, &[], |w| {
        let level = t.levels()[i];
        let p = NCPoly::from_normal_terms(
            level,
            std::collections::BTreeMap::from([(w.clone(), LaurentScalar::one())]),
        );
        Ok(TensorPoly::pure(vec![], vec![], counit(&p)))
    })
}

/// Applies comultiplication to factor `i` of a tensor.
pub fn comul_factor(t: &TensorPoly, i: usize) -> Result<TensorPoly, QgrError> {
    let level = t.levels()[i];
    let replacement = [level.as_full(), level];
    t.expand_factor(i, &replacement, |w| {
        let p = NCPoly::from_normal_terms(
            level,
            std::collections::BTreeMap::from([(w.clone(), LaurentScalar::one())]),
        );
        comul(&p)
    })
}
