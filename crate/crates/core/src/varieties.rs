//! Satisfaction of relations by exhaustive assignment and the catalog of
//! named bases.

use crate::error::{Error, Result};
use crate::semigroup::OrderedSemigroup;
use crate::terms::{letter_name, parse_relation, Relation, RelationKind};

/// Relations with more variables than this are refused on carriers larger
/// than [`GUARD_SIZE`] unless forced.
pub const GUARD_VARS: usize = 6;
pub const GUARD_SIZE: usize = 32;

/// A failing assignment and the values of both sides under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// `(letter, element)` for every variable of the relation, ascending.
    pub assignment: Vec<(usize, usize)>,
    pub lhs: usize,
    pub rhs: usize,
}

impl Counterexample {
    /// The assignment as a dense vector indexed by letter; unused letters
    /// get element 0.
    pub fn dense(&self) -> Vec<usize> {
        let len = self.assignment.iter().map(|&(l, _)| l + 1).max().unwrap_or(0);
        let mut v = vec![0; len];
        for &(l, e) in &self.assignment {
            v[l] = e;
        }
        v
    }

    pub fn describe(&self, a: &OrderedSemigroup) -> String {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|&(l, e)| format!("{}={}", letter_name(l), a.sgp().label(e)))
            .collect();
        format!(
            "{} gives {} and {}",
            parts.join(", "),
            a.sgp().label(self.lhs),
            a.sgp().label(self.rhs)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Satisfaction {
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Checks every assignment of the relation's variables into `a`, in
/// lexicographic order, and reports the first failure.
pub fn satisfies(a: &OrderedSemigroup, r: &Relation) -> Result<Satisfaction> {
    satisfies_with(a, r, false)
}

pub fn satisfies_with(a: &OrderedSemigroup, r: &Relation, force: bool) -> Result<Satisfaction> {
    let vars: Vec<usize> = r.variables().into_iter().collect();
    let n = a.size();
    if !force && vars.len() > GUARD_VARS && n > GUARD_SIZE {
        return Err(Error::TooExpensive {
            vars: vars.len(),
            size: n,
        });
    }
    let lhs = r.lhs.compile();
    let rhs = r.rhs.compile();
    let width = vars.last().map_or(0, |m| m + 1);
    let mut assignment = vec![0usize; width];
    let mut digits = vec![0usize; vars.len()];
    let mut stack = Vec::with_capacity(16);
    let sgp = a.sgp();
    loop {
        for (d, &v) in digits.iter().zip(&vars) {
            assignment[v] = *d;
        }
        let l = lhs.eval_with(sgp, &assignment, &mut stack);
        let rv = rhs.eval_with(sgp, &assignment, &mut stack);
        let ok = match r.kind {
            RelationKind::Equality => l == rv,
            RelationKind::LessEq => a.leq(l, rv),
        };
        if !ok {
            return Ok(Satisfaction {
                holds: false,
                counterexample: Some(Counterexample {
                    assignment: vars.iter().copied().zip(digits.iter().copied()).collect(),
                    lhs: l,
                    rhs: rv,
                }),
            });
        }
        // odometer, last variable fastest
        let mut k = digits.len();
        loop {
            if k == 0 {
                return Ok(Satisfaction {
                    holds: true,
                    counterexample: None,
                });
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < n {
                break;
            }
            digits[k] = 0;
        }
    }
}

/// Shorthand for relations known to be cheap; panics on a guard refusal.
pub(crate) fn holds(a: &OrderedSemigroup, r: &Relation) -> bool {
    satisfies_with(a, r, true).map(|s| s.holds).unwrap_or(false)
}

pub(crate) fn rel(text: &str) -> Relation {
    parse_relation(text).expect("built-in relation parses")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub name: String,
    pub relations: Vec<Relation>,
    /// Whether some relation is an inequality.
    pub ordered: bool,
}

/// Labels of the sixteen ordered normal band nodes, bottom row first and
/// left to right within a row, with the relation defining each node
/// together with `x x = x`.
pub const BAND_NODES: [(&str, &str); 16] = [
    ("N01", "x = y"),
    ("N02", "x <= y x y"),
    ("N03", "y x y <= x"),
    ("N04", "x y = x"),
    ("N05", "y x = x"),
    ("N06", "x y = y x"),
    ("N07", "x <= x y"),
    ("N08", "x y <= x"),
    ("N09", "x <= y x"),
    ("N10", "y x <= x"),
    ("N11", "x = x y x"),
    ("N12", "x y z = x z y"),
    ("N13", "x y z = y x z"),
    ("N14", "x <= x y x"),
    ("N15", "x y x <= x"),
    ("N16", "x y z x = x z y x"),
];

const CATALOG: [(&str, &[&str]); 13] = [
    ("CR", &["x^(w+1) = x"]),
    ("OCR", &["x^(w+1) = x", "x^w y^w = (x^w y^w)^w"]),
    (
        "NOCR",
        &[
            "x^(w+1) = x",
            "x^w y^w = (x^w y^w)^w",
            "x^w y^w x^w z^w x^w = x^w z^w x^w y^w x^w",
        ],
    ),
    ("B", &["x x = x"]),
    ("NB", &["x x = x", "x y z x = x z y x"]),
    ("Sl", &["x x = x", "x y = y x"]),
    ("RB", &["x y x = x", "x x = x"]),
    ("LZ", &["x y = x"]),
    ("RZ", &["x y = y"]),
    ("G", &["x^w y = y", "y x^w = y"]),
    ("A", &["x^(w+1) = x^w"]),
    ("Sl+", &["x x = x", "x y = y x", "x <= x y"]),
    ("Sl-", &["x x = x", "x y = y x", "x y <= x"]),
];

/// Every name accepted by [`named_basis`].
pub fn catalog_names() -> Vec<&'static str> {
    CATALOG
        .iter()
        .map(|(n, _)| *n)
        .chain(BAND_NODES.iter().map(|(n, _)| *n))
        .collect()
}

pub fn named_basis(name: &str) -> Result<Basis> {
    let texts: Vec<&str> = if let Some((_, rels)) = CATALOG.iter().find(|(n, _)| *n == name) {
        rels.to_vec()
    } else if let Some((_, r)) = BAND_NODES.iter().find(|(n, _)| *n == name) {
        vec!["x x = x", r]
    } else {
        return Err(Error::UnknownName(name.to_string()));
    };
    let relations: Vec<Relation> = texts.into_iter().map(rel).collect();
    Ok(Basis {
        name: name.to_string(),
        ordered: relations.iter().any(|r| r.is_inequality()),
        relations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub holds: bool,
    /// The first relation of the basis that fails, with its witness.
    pub failure: Option<(Relation, Counterexample)>,
}

pub fn member(a: &OrderedSemigroup, name: &str) -> Result<Membership> {
    member_with(a, name, false)
}

pub fn member_with(a: &OrderedSemigroup, name: &str, force: bool) -> Result<Membership> {
    let basis = named_basis(name)?;
    satisfies_basis(a, &basis, force)
}

pub fn satisfies_basis(a: &OrderedSemigroup, basis: &Basis, force: bool) -> Result<Membership> {
    for r in &basis.relations {
        let s = satisfies_with(a, r, force)?;
        if let Some(c) = s.counterexample {
            return Ok(Membership {
                holds: false,
                failure: Some((r.clone(), c)),
            });
        }
    }
    Ok(Membership {
        holds: true,
        failure: None,
    })
}

/// Membership in a catalog pseudovariety; catalog bases are small enough
/// that the guard never applies.
pub fn is_member(a: &OrderedSemigroup, name: &str) -> bool {
    member_with(a, name, true)
        .map(|m| m.holds)
        .unwrap_or_else(|e| panic!("catalog lookup failed: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::FiniteSemigroup;

    fn ordered(rows: Vec<Vec<usize>>, pairs: &[(usize, usize)]) -> OrderedSemigroup {
        OrderedSemigroup::new(FiniteSemigroup::new(rows, None).unwrap(), pairs).unwrap()
    }

    fn u_plus() -> OrderedSemigroup {
        ordered(vec![vec![0, 1], vec![1, 1]], &[(0, 1)])
    }

    fn left_zero() -> OrderedSemigroup {
        ordered(vec![vec![0, 0], vec![1, 1]], &[])
    }

    fn right_zero() -> OrderedSemigroup {
        ordered(vec![vec![0, 1], vec![0, 1]], &[])
    }

    fn g_top_c2() -> OrderedSemigroup {
        ordered(
            vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 2]],
            &[(0, 2), (1, 2)],
        )
    }

    #[test]
    fn satisfies_examples() {
        assert!(satisfies(&u_plus(), &rel("x <= x y")).unwrap().holds);
        assert!(satisfies(&left_zero(), &rel("x <= x y")).unwrap().holds);
        let s = satisfies(&right_zero(), &rel("x <= x y")).unwrap();
        assert!(!s.holds);
        let c = s.counterexample.unwrap();
        assert_eq!(c.assignment, vec![(0, 0), (1, 1)]);
        assert_eq!((c.lhs, c.rhs), (0, 1));
        assert!(!satisfies(&u_plus().dual(), &rel("x <= x y")).unwrap().holds);
    }

    #[test]
    fn inequalities_under_equality_order_are_equations() {
        let l = left_zero();
        for (ineq, eq) in [("x <= x y", "x = x y"), ("x y <= y", "x y = y")] {
            assert_eq!(
                satisfies(&l, &rel(ineq)).unwrap().holds,
                satisfies(&l, &rel(eq)).unwrap().holds
            );
        }
    }

    #[test]
    fn named_bases() {
        let cr = named_basis("CR").unwrap();
        assert_eq!(cr.relations, vec![rel("x^(w+1) = x")]);
        assert!(!cr.ordered);
        let nocr = named_basis("NOCR").unwrap();
        assert_eq!(nocr.relations.len(), 3);
        assert_eq!(nocr.relations[2].lhs.leaf_count(), 5);
        let slp = named_basis("Sl+").unwrap();
        assert!(slp.ordered);
        assert_eq!(slp.relations[2], rel("x <= x y"));
        assert_eq!(named_basis("N16").unwrap().relations.len(), 2);
        assert_eq!(
            named_basis("nope").unwrap_err(),
            Error::UnknownName("nope".into())
        );
        assert_eq!(catalog_names().len(), 29);
    }

    #[test]
    fn membership_examples() {
        assert!(member(&g_top_c2(), "NOCR").unwrap().holds);
        let m = member(&u_plus(), "G").unwrap();
        assert!(!m.holds);
        assert_eq!(m.failure.unwrap().0, rel("x^w y = y"));
        assert!(member(&left_zero(), "RB").unwrap().holds);
        assert!(member(&left_zero(), "LZ").unwrap().holds);
        assert!(!member(&left_zero(), "RZ").unwrap().holds);
    }

    #[test]
    fn guard_refuses_large_checks() {
        let c = (0..33).map(|i| (0..33).map(|j| (i + j) % 33).collect()).collect();
        let big = OrderedSemigroup::unordered(FiniteSemigroup::new(c, None).unwrap());
        let r = rel("x y z t a b c = c b a t z y x");
        assert_eq!(
            satisfies(&big, &r).unwrap_err(),
            Error::TooExpensive { vars: 7, size: 33 }
        );
    }

    #[test]
    fn duality_flips_inequalities() {
        let a = g_top_c2();
        for text in ["x^w <= x^w y^w x^w", "x <= x y", "x y x <= x"] {
            let r = rel(text);
            assert_eq!(
                satisfies(&a.dual(), &r).unwrap().holds,
                satisfies(&a, &r.reversed()).unwrap().holds
            );
        }
    }
}
