//! Maya diagrams, the direct limit of the Grassmannian rings, and towers in
//! the inverse limit.
//!
//! A diagram `a` names the stable generator whose minor at a level with `m`
//! rows below zero has row set `{-a_m, ..., -a_1}`. These row sets are
//! exactly the ones the r-maps produce, so the projections `ρ` commute with
//! the e-maps.

mod maya;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

pub use maya::MayaDiagram;

use crate::coeff::LaurentScalar;
use crate::error::QgrError;
use crate::grassmann::{e_project_grass, eval_embed, minor_expr_equal, MinorExpr, MinorWord};
use crate::qmatrix::Level;

/// A finite combination of words in the stable generators `D_a`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LimitElement {
    terms: BTreeMap<Vec<MayaDiagram>, LaurentScalar>,
}

impl LimitElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentScalar::one())
    }

    pub fn scalar(c: LaurentScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(Vec::new(), c);
        x
    }

    pub fn generator(a: MayaDiagram) -> Self {
        let mut x = Self::zero();
        x.add_term(vec![a], LaurentScalar::one());
        x
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<MayaDiagram>, LaurentScalar)>,
    {
        let mut x = Self::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    pub fn terms(&self) -> &BTreeMap<Vec<MayaDiagram>, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Vec<MayaDiagram>, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms.iter().chain(&other.terms).map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&LaurentScalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                out.add_term(w, cu * cv);
            }
        }
        out
    }

    pub fn diagrams(&self) -> impl Iterator<Item = &MayaDiagram> {
        self.terms.keys().flatten()
    }

    /// The smallest rectangular level at which no generator of `self`
    /// projects to zero.
    pub fn dominating_level(&self) -> Level {
        let m = self
            .diagrams()
            .map(|a| a.order() as i32 - 1)
            .fold(1, i32::max);
        let n = self.diagrams().map(|a| 1 - a.entry(1)).fold(1, i32::max);
        Level::rect(m, n).expect("m, n >= 1")
    }
}

impl fmt::Display for LimitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::qmatrix::fmt_sum(
            f,
            self.terms.iter().map(|(w, c)| {
                let parts: Vec<String> = w.iter().map(|a| format!("D{a}")).collect();
                (parts.join("*"), c)
            }),
        )
    }
}

impl fmt::Debug for LimitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LimitElement[{self}]")
    }
}

/// Row set of `ρ_{(m,n)}(D_a)`, or `None` when the projection is zero:
/// nonzero iff `a_i = i` for `i > m` and `-a_1 <= n - 1`.
pub fn rho_generator(a: &MayaDiagram, level: Level) -> Option<Vec<i32>> {
    let m = level.m() as usize;
    (a.order() <= m + 1 && -a.entry(1) < level.n()).then(|| a.row_set(m))
}

pub fn rho_project(x: &LimitElement, level: Level) -> MinorExpr {
    let level = level.as_rect();
    let mut out = MinorExpr::zero(level);
    'terms: for (w, c) in &x.terms {
        let mut rows = Vec::with_capacity(w.len());
        for a in w {
            match rho_generator(a, level) {
                Some(r) => rows.push(r),
                None => continue 'terms,
            }
        }
        let term = MinorExpr::from_words(level, [(MinorWord(rows), c.clone())])
            .expect("projected row sets lie in the level");
        out = out.try_add(&term).expect("same level");
    }
    out
}

/// Equality in the direct limit, decided at the minimal dominating level.
pub fn limit_equal(x: &LimitElement, y: &LimitElement) -> bool {
    let (a, b) = (x.dominating_level(), y.dominating_level());
    let level = Level::rect(a.m().max(b.m()), a.n().max(b.n())).expect("positive");
    limit_equal_at(x, y, level)
}

/// Equality of the projections at a given level (which should dominate).
pub fn limit_equal_at(x: &LimitElement, y: &LimitElement, level: Level) -> bool {
    eval_embed(&rho_project(&x.sub(y), level)).is_zero()
}

type SliceFn = dyn Fn(Level) -> Result<MinorExpr, QgrError> + Send + Sync;

/// An element of the inverse limit, given by a rule for its level slices.
/// Slices are computed on demand and cached.
#[derive(Clone)]
pub struct Tower {
    rule: Arc<SliceFn>,
    cache: Arc<Mutex<HashMap<Level, MinorExpr>>>,
    core: Option<LimitElement>,
}

impl Tower {
    pub fn new<F>(rule: F) -> Self
    where
        F: Fn(Level) -> Result<MinorExpr, QgrError> + Send + Sync + 'static,
    {
        Self {
            rule: Arc::new(rule),
            cache: Arc::default(),
            core: None,
        }
    }

    pub fn constant_one() -> Self {
        Self::new(|l| Ok(MinorExpr::one(l)))
    }

    pub fn zero() -> Self {
        Self::new(|l| Ok(MinorExpr::zero(l)))
    }

    /// The finite element this tower is the image of, if any.
    pub fn core(&self) -> Option<&LimitElement> {
        self.core.as_ref()
    }

    pub fn slice(&self, level: Level) -> Result<MinorExpr, QgrError> {
        let level = level.as_rect();
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(&level) {
            return Ok(hit.clone());
        }
        let s = (self.rule)(level)?;
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(level, s.clone());
        Ok(s)
    }

    /// A copy whose slice at `level` is replaced by `value`.
    pub fn with_slice(&self, level: Level, value: MinorExpr) -> Self {
        let inner = self.clone();
        let level = level.as_rect();
        let mut t = Self::new(move |l| {
            if l == level {
                Ok(value.clone())
            } else {
                inner.slice(l)
            }
        });
        t.core = None;
        t
    }
}

/// The injection `I`: the tower of projections of `x`.
pub fn tower_from_finite(x: &LimitElement) -> Tower {
    let core = x.clone();
    let mut t = Tower::new(move |l| Ok(rho_project(&core, l)));
    t.core = Some(x.clone());
    t
}

/// Pairs `(high, low)` where `e(t_high) != t_low`; an error if a pair does
/// not dominate.
pub fn tower_compat_check(t: &Tower, pairs: &[(Level, Level)]) -> Result<Vec<String>, QgrError> {
    let mut bad = Vec::new();
    for &(hi, lo) in pairs {
        let projected = e_project_grass(&t.slice(hi)?, lo)?;
        if !minor_expr_equal(&projected, &t.slice(lo)?)? {
            bad.push(format!("{hi}->{lo}"));
        }
    }
    Ok(bad)
}

/// Lifts the level-`(k,k)` slice of `t` to the direct limit by sending each
/// minor to the diagram of its row set.
pub fn density_approx(t: &Tower, k: i32) -> Result<LimitElement, QgrError> {
    let level = Level::rect(k, k)?;
    let slice = t
        .slice(level)
        .map_err(|_| QgrError::SliceUnavailable { level })?;
    let mut out = LimitElement::zero();
    for (w, c) in slice.terms() {
        let diagrams = w
            .factors()
            .iter()
            .map(|rows| MayaDiagram::from_row_set(rows))
            .collect::<Result<Vec<_>, _>>()?;
        out.add_term(diagrams, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn maya(p: &[i32]) -> MayaDiagram {
        MayaDiagram::from_prefix(p.to_vec()).unwrap()
    }

    fn rect(m: i32, n: i32) -> Level {
        Level::rect(m, n).unwrap()
    }

    fn gen(level: Level, rows: &[i32]) -> MinorExpr {
        MinorExpr::generator(level, rows.to_vec()).unwrap()
    }

    #[test]
    fn rho_examples() {
        let x = LimitElement::generator(maya(&[-1, 1]));
        assert_eq!(rho_project(&x, rect(3, 4)), gen(rect(3, 4), &[-3, -1, 1]));
        assert_eq!(rho_project(&x, rect(2, 4)), gen(rect(2, 4), &[-1, 1]));
        assert!(rho_project(&x, rect(1, 4)).is_zero());
        assert!(rho_project(&x, rect(3, 1)).is_zero());
        let id = LimitElement::generator(MayaDiagram::identity());
        assert_eq!(rho_project(&id, rect(1, 2)), gen(rect(1, 2), &[-1]));
    }

    #[test]
    fn dominating_levels() {
        let x = LimitElement::generator(maya(&[-1, 1]));
        assert_eq!(x.dominating_level(), rect(2, 2));
        assert_eq!(LimitElement::one().dominating_level(), rect(1, 1));
    }

    #[test]
    fn equality() {
        let a = LimitElement::generator(maya(&[0]));
        let b = LimitElement::generator(MayaDiagram::identity());
        assert!(limit_equal(&a, &a));
        assert!(!limit_equal(&a, &b));
        // D_{[0|2]} has rows {0} at m = 1 and D_{[|1]} has rows {-1}:
        // D{0} D{-1} = q D{-1} D{0}.
        let lhs = a.mul(&b);
        let rhs = b.mul(&a).scale(&LaurentScalar::q());
        assert!(limit_equal(&lhs, &rhs));
    }

    #[test]
    fn towers() {
        let x = LimitElement::generator(maya(&[-1, 1]));
        let t = tower_from_finite(&x);
        assert_eq!(t.slice(rect(3, 4)).unwrap(), gen(rect(3, 4), &[-3, -1, 1]));
        let pairs = [(rect(3, 4), rect(2, 3)), (rect(4, 5), rect(3, 4))];
        assert!(tower_compat_check(&t, &pairs).unwrap().is_empty());
        assert!(tower_compat_check(&Tower::constant_one(), &pairs).unwrap().is_empty());
        let broken = t.with_slice(rect(2, 3), MinorExpr::zero(rect(2, 3)));
        assert!(!tower_compat_check(&broken, &pairs).unwrap().is_empty());
        assert!(tower_compat_check(&t, &[(rect(1, 1), rect(2, 2))]).is_err());
    }

    #[test]
    fn density() {
        let x = LimitElement::generator(maya(&[-1, 1])).add(&LimitElement::one());
        let t = tower_from_finite(&x);
        for k in 1..=3 {
            let y = density_approx(&t, k).unwrap();
            assert_eq!(rho_project(&y, rect(k, k)), t.slice(rect(k, k)).unwrap());
        }
        assert!(density_approx(&Tower::zero(), 2).unwrap().is_zero());
        assert_eq!(density_approx(&Tower::constant_one(), 2).unwrap(), LimitElement::one());
    }
}
