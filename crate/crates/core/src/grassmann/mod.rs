//! The quantum Grassmannian ring `k_q[Δ_{m,n}]`: the subring of the
//! rectangular matrix algebra generated by maximal minors on the leading
//! `m` columns. Relations are discovered degree by degree as the kernel of
//! the evaluation map.

mod expr;

use std::collections::BTreeMap;

use itertools::Itertools;
use num::{BigRational, One};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

pub use expr::{eval_embed, minor_expr_equal, MinorExpr, MinorWord};

use crate::coeff::{LaurentScalar, ScalarMatrix};
use crate::error::QgrError;
use crate::qmatrix::{Level, Word};

/// Largest degree accepted by relation discovery without forcing.
pub const DEFAULT_MAX_DEGREE: usize = 3;
/// Largest matrix size `m + n` accepted by relation discovery without forcing.
pub const DEFAULT_MAX_SIZE: usize = 5;

/// Whether `(level, d)` is within the default desk-scale caps.
pub fn within_caps(level: Level, d: usize, max_degree: usize, max_size: usize) -> bool {
    d <= max_degree && level.size() <= max_size
}

/// All `m`-subsets of the row window, in lexicographic order.
pub fn minor_generators(level: Level) -> Vec<Vec<i32>> {
    level.rows().combinations(level.m() as usize).collect()
}

/// All ordered degree-`d` products of generators.
pub fn minor_words(level: Level, d: usize) -> Vec<MinorWord> {
    let gens = minor_generators(level);
    if d == 0 {
        return vec![MinorWord::unit()];
    }
    std::iter::repeat_n(gens, d)
        .multi_cartesian_product()
        .map(MinorWord)
        .collect()
}

/// The degree-`d` evaluation matrix: one column per minor word, one row per
/// normal word of the matrix algebra that occurs.
pub fn evaluation_matrix(level: Level, d: usize) -> (Vec<MinorWord>, ScalarMatrix) {
    let level = level.as_rect();
    let words = minor_words(level, d);
    let images: Vec<_> = words.iter().map(|w| expr::eval_word(level, w)).collect();
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for p in &images {
        for w in p.terms().keys() {
            let next = index.len();
            index.entry(w.clone()).or_insert(next);
        }
    }
    let columns = images
        .iter()
        .map(|p| {
            let mut col = vec![LaurentScalar::zero(); index.len()];
            for (w, c) in p.terms() {
                col[index[w]] = c.clone();
            }
            col
        })
        .collect();
    let m = ScalarMatrix::from_columns(index.len(), columns).expect("columns share a length");
    (words, m)
}

/// Rank of the degree-`d` piece of the Grassmannian ring.
pub fn graded_dimension(level: Level, d: usize) -> usize {
    evaluation_matrix(level, d).1.rank()
}

/// A linear relation among degree-`d` minor words; its evaluation is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationVector {
    pub level: Level,
    pub degree: usize,
    pub support: Vec<MinorWord>,
    pub coeffs: Vec<LaurentScalar>,
}

impl RelationVector {
    pub fn to_expr(&self) -> MinorExpr {
        MinorExpr::from_words(
            self.level,
            self.support.iter().cloned().zip(self.coeffs.iter().cloned()),
        )
        .expect("support words come from the level")
    }

    /// Coefficients at `q = 1`.
    pub fn at_one(&self) -> Vec<BigRational> {
        self.coeffs.iter().map(LaurentScalar::at_one).collect()
    }
}

impl Serialize for RelationVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        struct Terms<'a>(&'a RelationVector);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.support.len()))?;
                for (w, c) in self.0.support.iter().zip(&self.0.coeffs) {
                    seq.serialize_element(&serde_json_like::Term { coeff: c, word: w })?;
                }
                seq.end()
            }
        }
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("degree", &self.degree)?;
        map.serialize_entry("terms", &Terms(self))?;
        map.end()
    }
}

mod serde_json_like {
    use serde::Serialize;

    #[derive(Serialize)]
    pub(super) struct Term<'a> {
        pub coeff: &'a crate::coeff::LaurentScalar,
        pub word: &'a super::MinorWord,
    }
}

/// Kernel of the degree-`d` evaluation matrix. With `at_q_one` the matrix is
/// specialized to `q = 1` before solving, giving the classical relations.
pub fn relation_basis(level: Level, d: usize, at_q_one: bool) -> Vec<RelationVector> {
    let level = level.as_rect();
    let (words, m) = evaluation_matrix(level, d);
    let m = if at_q_one {
        m.specialize(&BigRational::one()).expect("q = 1 is nonzero")
    } else {
        m
    };
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let (support, coeffs) = words
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (w.clone(), c))
                .unzip();
            RelationVector {
                level,
                degree: d,
                support,
                coeffs,
            }
        })
        .collect()
}

/// The e-map on generators: strips the block `-m'..=-m-1` from the front of
/// the row set, or gives 0 if it is not there or the rest leaves the target
/// window.
pub fn e_project_generator(from: Level, to: Level, rows: &[i32]) -> Option<Vec<i32>> {
    let k = (from.m() - to.m()) as usize;
    let block = -from.m()..-to.m();
    let (head, tail) = rows.split_at(k);
    (head.iter().copied().eq(block) && tail.iter().all(|&r| r < to.n())).then(|| tail.to_vec())
}

/// The r-map on generators: prepends the block `-m'..=-m-1`.
pub fn r_embed_generator(from: Level, to: Level, rows: &[i32]) -> Vec<i32> {
    (-to.m()..-from.m()).chain(rows.iter().copied()).collect()
}

pub fn e_project_grass(x: &MinorExpr, to: Level) -> Result<MinorExpr, QgrError> {
    let (from, to) = (x.level(), to.as_rect());
    from.require_dominates(&to)?;
    x.map_generators(to, |rows| match e_project_generator(from, to, rows) {
        Some(r) => MinorExpr::generator(to, r),
        None => Ok(MinorExpr::zero(to)),
    })
}

pub fn r_embed_grass(x: &MinorExpr, to: Level) -> Result<MinorExpr, QgrError> {
    let (from, to) = (x.level(), to.as_rect());
    to.require_dominates(&from)?;
    x.map_generators(to, |rows| MinorExpr::generator(to, r_embed_generator(from, to, rows)))
}

/// Maps every degree-`d` relation at `from` to `to` (by e when `from`
/// dominates, otherwise by r) and returns those whose image does not
/// evaluate to zero.
pub fn relation_transport_check(
    from: Level,
    to: Level,
    d: usize,
) -> Result<Vec<String>, QgrError> {
    let (from, to) = (from.as_rect(), to.as_rect());
    let mut bad = Vec::new();
    for rel in relation_basis(from, d, false) {
        let x = rel.to_expr();
        let image = if from.dominates(&to) {
            e_project_grass(&x, to)?
        } else {
            r_embed_grass(&x, to)?
        };
        if !eval_embed(&image).is_zero() {
            bad.push(x.to_string());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lvl(m: i32, n: i32) -> Level {
        Level::rect(m, n).unwrap()
    }

    #[test]
    fn generator_lists() {
        assert_eq!(minor_generators(lvl(1, 1)), vec![vec![-1], vec![0]]);
        assert_eq!(minor_generators(lvl(2, 2)).len(), 6);
        assert_eq!(minor_generators(lvl(1, 2)), vec![vec![-1], vec![0], vec![1]]);
    }

    #[test]
    fn eval_examples() {
        let l = lvl(1, 1);
        assert_eq!(eval_embed(&MinorExpr::one(l)), crate::qmatrix::NCPoly::one(l));
        let a = MinorExpr::generator(l, vec![-1]).unwrap();
        let b = MinorExpr::generator(l, vec![0]).unwrap();
        let rel = b
            .try_mul(&a)
            .unwrap()
            .try_sub(&a.try_mul(&b).unwrap().scale(&LaurentScalar::q()))
            .unwrap();
        assert!(eval_embed(&rel).is_zero());
        assert!(MinorExpr::generator(l, vec![-1, 0]).is_err());
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(graded_dimension(lvl(1, 1), 0), 1);
        assert_eq!(graded_dimension(lvl(1, 1), 2), 3);
        assert!(relation_basis(lvl(2, 2), 1, false).is_empty());
        let rels = relation_basis(lvl(1, 1), 2, false);
        assert_eq!(rels.len(), 1);
        assert!(eval_embed(&rels[0].to_expr()).is_zero());
    }

    #[test]
    fn ladder_generators() {
        let (hi, lo) = (lvl(2, 2), lvl(1, 1));
        let x = MinorExpr::generator(hi, vec![-2, -1]).unwrap();
        assert_eq!(
            e_project_grass(&x, lo).unwrap(),
            MinorExpr::generator(lo, vec![-1]).unwrap()
        );
        let y = MinorExpr::generator(hi, vec![-1, 0]).unwrap();
        assert!(e_project_grass(&y, lo).unwrap().is_zero());
        let z = MinorExpr::generator(lvl(1, 2), vec![-1]).unwrap();
        assert_eq!(
            r_embed_grass(&z, lvl(2, 3)).unwrap(),
            MinorExpr::generator(lvl(2, 3), vec![-2, -1]).unwrap()
        );
        assert!(r_embed_grass(&z, lvl(1, 1)).is_err());
    }

    #[test]
    fn relation_json_shape() {
        let rel = &relation_basis(lvl(1, 1), 2, false)[0];
        let json = serde_json::to_value(rel).unwrap();
        assert_eq!(json["degree"], 2);
        assert_eq!(json["terms"].as_array().unwrap().len(), 2);
        assert!(json["terms"][0]["word"][0].is_array());
    }
}
