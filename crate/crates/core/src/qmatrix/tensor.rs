use std::collections::BTreeMap;
use std::fmt;

use super::level::{Gen, Level, Word};
use super::poly::NCPoly;
use super::rewrite::{self, Terms};
use crate::coeff::LaurentScalar;
use crate::error::QgrError;

/// An element of a tensor product of level algebras.
///
/// Usually two factors (the carrier of comultiplications and coactions), but
/// any arity is allowed so that iterated maps like `(Δ⊗id)Δ` can be formed.
/// Arity zero is the coefficient ring itself.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorPoly {
    levels: Vec<Level>,
    terms: BTreeMap<Vec<Word>, LaurentScalar>,
}

impl TensorPoly {
    pub fn zero(levels: Vec<Level>) -> Self {
        Self {
            levels,
            terms: BTreeMap::new(),
        }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(levels: Vec<Level>) -> Self {
        let k = levels.len();
        Self::pure(levels, vec![Word::unit(); k], LaurentScalar::one())
    }

    /// A single term `c · w_1 ⊗ ... ⊗ w_k` with each `w_i` already normal.
    pub fn pure(levels: Vec<Level>, words: Vec<Word>, c: LaurentScalar) -> Self {
        assert_eq!(levels.len(), words.len(), "tensor arity mismatch");
        let mut t = Self::zero(levels);
        t.add_term(words, c);
        t
    }

    pub fn from_poly(x: &NCPoly) -> Self {
        let mut t = Self::zero(vec![x.level()]);
        for (w, c) in x.terms() {
            t.add_term(vec![w.clone()], c.clone());
        }
        t
    }

    /// `x ⊗ y`.
    pub fn outer(x: &NCPoly, y: &NCPoly) -> Self {
        let mut t = Self::zero(vec![x.level(), y.level()]);
        for (u, cu) in x.terms() {
            for (v, cv) in y.terms() {
                t.add_term(vec![u.clone(), v.clone()], cu * cv);
            }
        }
        t
    }

    /// `x_1 ⊗ ... ⊗ x_k`.
    pub fn outer_many(factors: &[NCPoly]) -> Self {
        let mut t = Self::unit(factors.iter().map(NCPoly::level).collect());
        for (i, x) in factors.iter().enumerate() {
            t = t
                .expand_factor(i, &[x.level()], |_| Ok(TensorPoly::from_poly(x)))
                .expect("factor levels agree by construction");
        }
        t
    }

    /// The multiplication map `A ⊗ A -> A`.
    pub fn multiply(&self) -> Result<NCPoly, QgrError> {
        assert_eq!(self.arity(), 2, "multiply needs an arity-two tensor");
        self.levels[0].require_same(&self.levels[1])?;
        let mut acc = Terms::new();
        for (ws, c) in &self.terms {
            rewrite::mul_into(&mut acc, &ws[0].0, &ws[1].0, c);
        }
        Ok(NCPoly::from_terms(self.levels[0], acc))
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn arity(&self) -> usize {
        self.levels.len()
    }

    pub fn left_level(&self) -> Level {
        self.levels[0]
    }

    pub fn right_level(&self) -> Level {
        self.levels[self.levels.len() - 1]
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, words: Vec<Word>, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&words) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&words);
                }
            }
            None => {
                self.terms.insert(words, c);
            }
        }
    }

    fn require_same(&self, other: &Self) -> Result<(), QgrError> {
        if self.levels.len() != other.levels.len() {
            return Err(QgrError::DimensionMismatch {
                expected: self.levels.len(),
                found: other.levels.len(),
            });
        }
        for (a, b) in self.levels.iter().zip(&other.levels) {
            a.require_same(b)?;
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, QgrError> {
        self.require_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, QgrError> {
        self.try_add(&other.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.levels.clone());
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac⊗bd`, normalized in each factor.
    pub fn tensor_mul(&self, other: &Self) -> Result<Self, QgrError> {
        self.require_same(other)?;
        let mut out = Self::zero(self.levels.clone());
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let factors: Vec<Terms> = u
                    .iter()
                    .zip(v)
                    .map(|(a, b)| {
                        let mut acc = Terms::new();
                        rewrite::mul_into(&mut acc, &a.0, &b.0, &LaurentScalar::one());
                        acc
                    })
                    .collect();
                let base = cu * cv;
                for_each_combination(&factors, &mut |words, c| {
                    out.add_term(words, &base * c);
                });
            }
        }
        Ok(out)
    }

    /// Replaces factor `i` by the tensor `f(w)` for each word `w` there.
    /// Every `f(w)` must have factor levels `replacement`; the result has
    /// arity `arity - 1 + replacement.len()`.
    pub fn expand_factor<F>(&self, i: usize, replacement: &[Level], mut f: F) -> Result<Self, QgrError>
    where
        F: FnMut(&Word) -> Result<TensorPoly, QgrError>,
    {
        assert!(i < self.arity(), "factor index out of range");
        let mut levels = self.levels[..i].to_vec();
        levels.extend_from_slice(replacement);
        levels.extend_from_slice(&self.levels[i + 1..]);
        let mut out = Self::zero(levels);
        let mut cache: BTreeMap<Word, TensorPoly> = BTreeMap::new();
        for (words, c) in &self.terms {
            let image = match cache.get(&words[i]) {
                Some(t) => t,
                None => {
                    let t = f(&words[i])?;
                    if t.levels != replacement {
                        return Err(QgrError::DimensionMismatch {
                            expected: replacement.len(),
                            found: t.levels.len(),
                        });
                    }
                    cache.entry(words[i].clone()).or_insert(t)
                }
            };
            for (inner, ci) in &image.terms {
                let mut spliced = words[..i].to_vec();
                spliced.extend(inner.iter().cloned());
                spliced.extend(words[i + 1..].iter().cloned());
                out.add_term(spliced, c * ci);
            }
        }
        Ok(out)
    }

    /// Applies a linear map `A -> B` to factor `i`.
    pub fn map_factor<F>(&self, i: usize, target: Level, mut f: F) -> Result<Self, QgrError>
    where
        F: FnMut(&Word) -> Result<NCPoly, QgrError>,
    {
        self.expand_factor(i, &[target], |w| f(w).map(|p| TensorPoly::from_poly(&p)))
    }

    /// Collects terms by the words in every factor except `i`; the values are
    /// the factor-`i` coefficients.
    pub fn coefficients_of_factor(&self, i: usize) -> BTreeMap<Vec<Word>, NCPoly> {
        let mut out: BTreeMap<Vec<Word>, NCPoly> = BTreeMap::new();
        for (words, c) in &self.terms {
            let mut key = words.clone();
            let w = key.remove(i);
            out.entry(key)
                .or_insert_with(|| NCPoly::zero(self.levels[i]))
                .add_term(w, c.clone());
        }
        out
    }

    /// The single factor of an arity-one tensor.
    pub fn into_poly(self) -> NCPoly {
        assert_eq!(self.arity(), 1, "into_poly needs an arity-one tensor");
        let level = self.levels[0];
        NCPoly::from_normal_terms(
            level,
            self.terms
                .into_iter()
                .map(|(mut w, c)| (w.remove(0), c))
                .collect(),
        )
    }

    /// The coefficient of an arity-zero tensor.
    pub fn into_scalar(self) -> LaurentScalar {
        assert_eq!(self.arity(), 0, "into_scalar needs an arity-zero tensor");
        self.terms.into_values().next().unwrap_or_default()
    }

    /// Image of `x` under the algebra map determined by `image(g)` on
    /// generators (each image an element of the tensor product `levels`).
    pub fn algebra_image<F>(x: &NCPoly, levels: Vec<Level>, mut image: F) -> Result<Self, QgrError>
    where
        F: FnMut(Gen) -> Result<TensorPoly, QgrError>,
    {
        let mut cache: BTreeMap<Gen, TensorPoly> = BTreeMap::new();
        let mut out = Self::zero(levels.clone());
        for (w, c) in x.terms() {
            let mut acc = Self::unit(levels.clone()).scale(c);
            for g in w.letters() {
                if !cache.contains_key(g) {
                    cache.insert(*g, image(*g)?);
                }
                acc = acc.tensor_mul(&cache[g])?;
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }
}

fn for_each_combination<F>(factors: &[Terms], f: &mut F)
where
    F: FnMut(Vec<Word>, &LaurentScalar),
{
    fn go<F>(factors: &[Terms], prefix: &mut Vec<Word>, c: LaurentScalar, f: &mut F)
    where
        F: FnMut(Vec<Word>, &LaurentScalar),
    {
        match factors.split_first() {
            None => f(prefix.clone(), &c),
            Some((head, rest)) => {
                for (w, cw) in head {
                    prefix.push(Word(w.clone()));
                    go(rest, prefix, &c * cw, f);
                    prefix.pop();
                }
            }
        }
    }
    go(factors, &mut Vec::new(), LaurentScalar::one(), f);
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::fmt_sum(
            f,
            self.terms.iter().map(|(ws, c)| {
                let parts: Vec<String> = ws
                    .iter()
                    .map(|w| if w.is_empty() { "1".to_string() } else { w.to_string() })
                    .collect();
                let body = if parts.is_empty() {
                    String::new()
                } else {
                    format!("({})", parts.join(" ⊗ "))
                };
                (body, c)
            }),
        )
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorPoly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_times_anything() {
        let l = Level::new(1, 1).unwrap();
        let a = NCPoly::gen(l, -1, -1).unwrap();
        let t = TensorPoly::outer(&a, &a);
        let unit = TensorPoly::unit(vec![l, l]);
        assert_eq!(unit.tensor_mul(&t).unwrap(), t);
    }

    #[test]
    fn unit_factors_combine() {
        let l = Level::new(1, 1).unwrap();
        let a = NCPoly::gen(l, -1, -1).unwrap();
        let one = NCPoly::one(l);
        let lhs = TensorPoly::outer(&a, &one)
            .tensor_mul(&TensorPoly::outer(&one, &a))
            .unwrap();
        assert_eq!(lhs, TensorPoly::outer(&a, &a));
    }

    #[test]
    fn level_mismatch_rejected() {
        let l = Level::new(1, 1).unwrap();
        let l2 = Level::new(1, 2).unwrap();
        let t = TensorPoly::unit(vec![l, l]);
        assert!(t.tensor_mul(&TensorPoly::unit(vec![l, l2])).is_err());
    }
}
