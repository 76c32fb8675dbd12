//! Normal-form rewriting for the quantum matrix relations.
//!
//! Normal words are sorted ascending by `(row, col)`. A product is
//! normalized by inserting letters one at a time from the right; whenever
//! the last letter `x` of a normal word exceeds the incoming letter `g`,
//! the pair `x g` is rewritten with one of
//!
//! ```text
//! a_il a_ij = q a_ij a_il                          (same row, j < l)
//! a_kj a_ij = q a_ij a_kj                          (same column, i < k)
//! a_kl a_ij = a_ij a_kl                            (i < k, j > l)
//! a_kl a_ij = a_ij a_kl - (q^-1 - q) a_il a_kj     (i < k, j < l)
//! ```
//!
//! The rules never depend on the level, so results are memoized per
//! thread keyed only by the letters.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use super::level::Gen;
use crate::coeff::LaurentScalar;

pub(crate) type Terms = BTreeMap<Vec<Gen>, LaurentScalar>;

type Insertion = Rc<Vec<(Vec<Gen>, LaurentScalar)>>;

const CACHE_LIMIT: usize = 1 << 18;

thread_local! {
    static INSERT_CACHE: RefCell<HashMap<(Vec<Gen>, Gen), Insertion>> =
        RefCell::new(HashMap::new());
}

/// How the descending pair `x g` (with `x > g`) rewrites.
enum Swap {
    /// `x g = c * g x`
    Scaled(LaurentScalar),
    /// `x g = g x + c * y z`, with `y z` itself a descending pair
    Quartic(LaurentScalar, Gen, Gen),
}

fn swap_rule(x: Gen, g: Gen) -> Swap {
    debug_assert!(x > g);
    let (k, l, i, j) = (x.row, x.col, g.row, g.col);
    if k == i || l == j {
        Swap::Scaled(LaurentScalar::q())
    } else if l < j {
        Swap::Scaled(LaurentScalar::one())
    } else {
        // k > i and l > j; correction term is -(q^-1 - q) a_il a_kj
        let c = &LaurentScalar::q() - &LaurentScalar::q_pow(-1);
        Swap::Quartic(c, Gen::new(i, l), Gen::new(k, j))
    }
}

fn add_into(acc: &mut Terms, word: Vec<Gen>, c: LaurentScalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&word) {
        Some(slot) => {
            *slot += &c;
            if slot.is_zero() {
                acc.remove(&word);
            }
        }
        None => {
            acc.insert(word, c);
        }
    }
}

fn fuel_for(w: &[Gen], g: Gen) -> usize {
    let (lo, hi) = w
        .iter()
        .chain(std::iter::once(&g))
        .flat_map(|x| [x.row, x.col])
        .fold((i32::MAX, i32::MIN), |(lo, hi), v| (lo.min(v), hi.max(v)));
    let span = (hi - lo + 1) as usize;
    let len = w.len() + 1;
    len * len * span * span
}

/// Normal form of `w * g` for a normal word `w`.
fn insert_letter(w: &[Gen], g: Gen, depth: usize, fuel: usize) -> Insertion {
    if w.last().is_none_or(|&x| x <= g) {
        let mut out = w.to_vec();
        out.push(g);
        return Rc::new(vec![(out, LaurentScalar::one())]);
    }
    assert!(
        depth <= fuel,
        "rewriting fuel exhausted inserting {g} into a word of length {}; the rewrite orientation is broken",
        w.len()
    );
    let key = (w.to_vec(), g);
    if let Some(hit) = INSERT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }

    let (prefix, x) = (&w[..w.len() - 1], w[w.len() - 1]);
    let mut acc = Terms::new();
    let push_pair = |acc: &mut Terms, first: Gen, second: Gen, c: &LaurentScalar| {
        for (u, cu) in insert_letter(prefix, first, depth + 1, fuel).iter() {
            for (v, cv) in insert_letter(u, second, depth + 1, fuel).iter() {
                add_into(acc, v.clone(), &(c * cu) * cv);
            }
        }
    };
    match swap_rule(x, g) {
        Swap::Scaled(c) => push_pair(&mut acc, g, x, &c),
        Swap::Quartic(c, y, z) => {
            push_pair(&mut acc, g, x, &LaurentScalar::one());
            push_pair(&mut acc, y, z, &c);
        }
    }

    let result: Insertion = Rc::new(acc.into_iter().collect());
    INSERT_CACHE.with(|c| {
        let mut cache = c.borrow_mut();
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, result.clone());
    });
    result
}

/// Accumulates `c * u * v` (with `u` normal, `v` arbitrary) into `acc`.
pub(crate) fn mul_into(acc: &mut Terms, u: &[Gen], v: &[Gen], c: &LaurentScalar) {
    let mut current: Terms = BTreeMap::from([(u.to_vec(), c.clone())]);
    for &g in v {
        let mut next = Terms::new();
        for (w, cw) in &current {
            let fuel = fuel_for(w, g);
            for (r, cr) in insert_letter(w, g, 0, fuel).iter() {
                add_into(&mut next, r.clone(), cw * cr);
            }
        }
        current = next;
    }
    for (w, cw) in current {
        add_into(acc, w, cw);
    }
}

/// Normal form of an arbitrary word times a scalar.
pub(crate) fn normalize_letters(letters: &[Gen], c: &LaurentScalar) -> Terms {
    let mut acc = Terms::new();
    mul_into(&mut acc, &[], letters, c);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(i: i32, j: i32) -> Gen {
        Gen::new(i, j)
    }

    #[test]
    fn same_column_swap() {
        let t = normalize_letters(&[a(-1, -1), a(-2, -1)], &LaurentScalar::one());
        assert_eq!(t.len(), 1);
        assert_eq!(t[&vec![a(-2, -1), a(-1, -1)]], LaurentScalar::q());
    }

    #[test]
    fn quartic_swap() {
        let t = normalize_letters(&[a(-1, -1), a(-2, -2)], &LaurentScalar::one());
        let minus_corr = &LaurentScalar::q() - &LaurentScalar::q_pow(-1);
        assert_eq!(t[&vec![a(-2, -2), a(-1, -1)]], LaurentScalar::one());
        assert_eq!(t[&vec![a(-2, -1), a(-1, -2)]], minus_corr);
        assert_eq!(t.len(), 2);
    }

    #[test]
    #[should_panic(expected = "fuel exhausted")]
    fn fuel_guard_trips() {
        insert_letter(&[a(0, 1)], a(0, 0), 10, 1);
    }
}
