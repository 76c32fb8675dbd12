use std::collections::BTreeMap;

use super::minor::minor_or_unit;
use crate::coeff::LaurentScalar;
use crate::error::QgrError;
use crate::qmatrix::{ColumnWindow, Gen, Level, NCPoly};

/// Index placement for the cofactor formula of the antipode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AntipodeConvention {
    /// `S(a_ij) = (-q)^{j-i} D(rows ∖ j, cols ∖ i)`; satisfies the axioms.
    #[default]
    Transposed,
    /// `S(a_ij) = (-q)^{i-j} D(rows ∖ i, cols ∖ j)`; fails them, kept as a control.
    Literal,
}

/// Antipode of a single generator, as a polynomial representative.
pub fn antipode_generator(level: Level, g: Gen, conv: AntipodeConvention) -> NCPoly {
    let (skip_row, skip_col, e) = match conv {
        AntipodeConvention::Transposed => (g.col, g.row, g.col - g.row),
        AntipodeConvention::Literal => (g.row, g.col, g.row - g.col),
    };
    let rows: Vec<i32> = level.rows().filter(|&r| r != skip_row).collect();
    let cols: Vec<i32> = level.cols().filter(|&c| c != skip_col).collect();
    minor_or_unit(level, rows, cols).scale(&LaurentScalar::neg_q_pow(e))
}

/// Anti-multiplicative, linear extension of the generator antipode.
pub fn antipode(x: &NCPoly, conv: AntipodeConvention) -> Result<NCPoly, QgrError> {
    let level = x.level();
    if level.window() != ColumnWindow::Full {
        return Err(QgrError::LevelMismatch {
            left: level,
            right: level.as_full(),
        });
    }
    let mut images: BTreeMap<Gen, NCPoly> = BTreeMap::new();
    let mut out = NCPoly::zero(level);
    for (w, c) in x.terms() {
        let mut acc = NCPoly::scalar(level, c.clone());
        for &g in w.letters().iter().rev() {
            let s = images
                .entry(g)
                .or_insert_with(|| antipode_generator(level, g, conv));
            acc = &acc * &*s;
        }
        out = &out + &acc;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_one_values() {
        let l = Level::new(1, 1).unwrap();
        let t = AntipodeConvention::Transposed;
        let s = |i, j| antipode_generator(l, Gen::new(i, j), t);
        assert_eq!(s(-1, -1), NCPoly::gen(l, 0, 0).unwrap());
        assert_eq!(
            s(-1, 0),
            NCPoly::gen(l, -1, 0).unwrap().scale(&-LaurentScalar::q())
        );
        assert_eq!(
            s(0, -1),
            NCPoly::gen(l, 0, -1).unwrap().scale(&-LaurentScalar::q_pow(-1))
        );
    }

    #[test]
    fn anti_multiplicative_on_words() {
        let l = Level::new(1, 1).unwrap();
        let t = AntipodeConvention::Transposed;
        let a = NCPoly::gen(l, -1, 0).unwrap();
        let b = NCPoly::gen(l, 0, 0).unwrap();
        let lhs = antipode(&(&a * &b), t).unwrap();
        let rhs = &antipode(&b, t).unwrap() * &antipode(&a, t).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn size_one_level() {
        let l = Level::new(1, 0).unwrap();
        let s = antipode_generator(l, Gen::new(-1, -1), AntipodeConvention::Transposed);
        assert_eq!(s, NCPoly::one(l));
    }
}
