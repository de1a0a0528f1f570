//! Bounded search for divisions `T ≺ S^n`: an ordered subsemigroup of a
//! power of `S` with an isotone homomorphism onto `T`.
//!
//! Elements of `S^n` are never materialized as a table; tuples are encoded in
//! mixed radix and multiplied coordinatewise.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::iso::generating_set;
use crate::semigroup::{check_homomorphism, FiniteSemigroup, OrderedSemigroup};
use crate::matrix::BoolMatrix;
use crate::varieties::{holds, rel};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivideConfig {
    /// Largest power `n` of the divisor candidate searched.
    pub power_bound: usize,
    /// Number of coordinatewise products allowed before giving up.
    pub node_budget: u64,
}

impl DivideConfig {
    pub fn new(power_bound: usize) -> Self {
        DivideConfig {
            power_bound,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// A subsemigroup of `S^power` generated by `seeds`, listed as coordinate
/// tuples, together with the image in `T` of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionWitness {
    pub power: usize,
    pub seeds: Vec<Vec<usize>>,
    pub elements: Vec<Vec<usize>>,
    pub images: Vec<usize>,
}

impl DivisionWitness {
    /// The witnessing subsemigroup with the coordinatewise order.
    pub fn subsemigroup(&self, s: &OrderedSemigroup) -> Result<OrderedSemigroup> {
        let pos: HashMap<&[usize], usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_slice(), i))
            .collect();
        let m = self.elements.len();
        let mut rows = Vec::with_capacity(m);
        for a in &self.elements {
            let mut row = Vec::with_capacity(m);
            for b in &self.elements {
                let p: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| s.mul(x, y)).collect();
                match pos.get(p.as_slice()) {
                    Some(&k) => row.push(k),
                    None => return Err(Error::Format("witness elements are not closed".into())),
                }
            }
            rows.push(row);
        }
        let mut order = BoolMatrix::empty(m);
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                order.set(i, j, a.iter().zip(b).all(|(&x, &y)| s.leq(x, y)));
            }
        }
        let sgp = FiniteSemigroup::new(rows, None)?;
        OrderedSemigroup::from_order_matrix(sgp, order)
    }

    /// Rebuilds the subsemigroup and checks the map end to end.
    pub fn verify(&self, t: &OrderedSemigroup, s: &OrderedSemigroup) -> Result<bool> {
        let sub = self.subsemigroup(s)?;
        let r = check_homomorphism(&sub, t, &self.images)?;
        Ok(r.is_homomorphism() && r.surjective())
    }
}

struct PowerView<'a> {
    s: &'a OrderedSemigroup,
    n: usize,
    radix: u64,
}

impl PowerView<'_> {
    fn digits(&self, mut x: u64) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for k in (0..self.n).rev() {
            d[k] = (x % self.radix) as usize;
            x /= self.radix;
        }
        d
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.n {
            let p = self.s.mul((a % self.radix) as usize, (b % self.radix) as usize) as u64;
            out += p * scale;
            scale *= self.radix;
            a /= self.radix;
            b /= self.radix;
        }
        out
    }

    fn leq(&self, a: u64, b: u64) -> bool {
        let (mut a, mut b) = (a, b);
        for _ in 0..self.n {
            if !self.s.leq((a % self.radix) as usize, (b % self.radix) as usize) {
                return false;
            }
            a /= self.radix;
            b /= self.radix;
        }
        true
    }

    fn is_idempotent(&self, a: u64) -> bool {
        self.mul(a, a) == a
    }

    fn period(&self, a: u64) -> usize {
        self.digits(a)
            .iter()
            .map(|&x| self.s.sgp().index_period(x).period)
            .fold(1, lcm)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// The partial map built so far: members of the generated subsemigroup of
/// `S^n` in discovery order with their images.
struct Partial {
    members: Vec<u64>,
    images: Vec<usize>,
    index: HashMap<u64, usize>,
}

struct Searcher<'a> {
    t: &'a OrderedSemigroup,
    view: PowerView<'a>,
    gens: Vec<usize>,
    candidates: Vec<Vec<u64>>,
    budget: u64,
    spent: u64,
}

impl Searcher<'_> {
    fn charge(&mut self, k: u64) -> Result<()> {
        self.spent += k;
        if self.spent > self.budget {
            Err(Error::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `u ↦ img` and closes; `Ok(false)` on a conflict.
    fn add(&mut self, p: &mut Partial, u: u64, img: usize) -> Result<bool> {
        if let Some(&k) = p.index.get(&u) {
            return Ok(p.images[k] == img);
        }
        let mut queue = vec![(u, img)];
        while let Some((x, fx)) = queue.pop() {
            if let Some(&k) = p.index.get(&x) {
                if p.images[k] != fx {
                    return Ok(false);
                }
                continue;
            }
            for (k, &y) in p.members.iter().enumerate() {
                let fy = p.images[k];
                if self.view.leq(x, y) && !self.t.leq(fx, fy) {
                    return Ok(false);
                }
                if self.view.leq(y, x) && !self.t.leq(fy, fx) {
                    return Ok(false);
                }
            }
            p.index.insert(x, p.members.len());
            p.members.push(x);
            p.images.push(fx);
            self.charge(p.members.len() as u64 * 2)?;
            let count = p.members.len();
            for k in 0..count {
                let y = p.members[k];
                let fy = p.images[k];
                for (prod, fprod) in [
                    (self.view.mul(x, y), self.t.mul(fx, fy)),
                    (self.view.mul(y, x), self.t.mul(fy, fx)),
                ] {
                    match p.index.get(&prod) {
                        Some(&j) if p.images[j] != fprod => return Ok(false),
                        Some(_) => {}
                        None => queue.push((prod, fprod)),
                    }
                }
            }
        }
        Ok(true)
    }

    fn dfs(&mut self, level: usize, p: &mut Partial, chosen: &mut Vec<u64>) -> Result<bool> {
        if level == self.gens.len() {
            return Ok(true);
        }
        let target = self.gens[level];
        let cands = std::mem::take(&mut self.candidates[level]);
        let mut found = false;
        for &u in &cands {
            let mark = p.members.len();
            self.charge(1)?;
            if self.add(p, u, target)? {
                chosen.push(u);
                if self.dfs(level + 1, p, chosen)? {
                    found = true;
                    break;
                }
                chosen.pop();
            }
            p.rollback(mark);
        }
        self.candidates[level] = cands;
        Ok(found)
    }
}

impl Partial {
    fn rollback(&mut self, len: usize) {
        for x in self.members.drain(len..) {
            self.index.remove(&x);
        }
        self.images.truncate(len);
    }
}

/// Searches `n = 1..=power_bound` for `T ≺ S^n`. `Ok(None)` only means no
/// witness exists within the bound.
pub fn divides(t: &OrderedSemigroup, s: &OrderedSemigroup, power_bound: usize) -> Result<Option<DivisionWitness>> {
    divides_with(t, s, &DivideConfig::new(power_bound))
}

/// Identities inherited by divisors of powers; checked on carriers up to
/// this size before searching.
const SEPARATING: [&str; 4] = ["x y = y x", "x x = x", "x^w y^w = y^w x^w", "x^(w+1) = x"];
const SEPARATION_SIZE: usize = 256;

/// Some identity of `S` fails in `T`, so no power of `S` has `T` as a
/// divisor.
fn separated(t: &OrderedSemigroup, s: &OrderedSemigroup) -> bool {
    s.size() <= SEPARATION_SIZE
        && SEPARATING.iter().any(|r| {
            let r = rel(r);
            holds(s, &r) && !holds(t, &r)
        })
}

pub fn divides_with(
    t: &OrderedSemigroup,
    s: &OrderedSemigroup,
    config: &DivideConfig,
) -> Result<Option<DivisionWitness>> {
    if separated(t, s) {
        return Ok(None);
    }
    let gens = generating_set(t.sgp());
    let mut spent = 0;
    for n in 1..=config.power_bound.max(1) {
        let radix = s.size() as u64;
        let total = radix.checked_pow(n as u32).ok_or(Error::BudgetExceeded {
            budget: config.node_budget,
        })?;
        let view = PowerView { s, n, radix };
        let mut candidates = Vec::with_capacity(gens.len());
        for &g in &gens {
            let want_idem = t.sgp().is_idempotent(g);
            let g_period = t.sgp().index_period(g).period;
            let mut c = Vec::new();
            for u in 0..total {
                if want_idem && !view.is_idempotent(u) {
                    continue;
                }
                if !want_idem && !view.period(u).is_multiple_of(g_period) {
                    continue;
                }
                c.push(u);
            }
            spent += total;
            if spent > config.node_budget {
                return Err(Error::BudgetExceeded {
                    budget: config.node_budget,
                });
            }
            candidates.push(c);
        }
        let mut searcher = Searcher {
            t,
            view,
            gens: gens.clone(),
            candidates,
            budget: config.node_budget,
            spent,
        };
        let mut p = Partial {
            members: Vec::new(),
            images: Vec::new(),
            index: HashMap::new(),
        };
        let mut chosen = Vec::new();
        let found = searcher.dfs(0, &mut p, &mut chosen)?;
        spent = searcher.spent;
        if found {
            let view = &searcher.view;
            let mut pairs: Vec<(u64, usize)> = p.members.into_iter().zip(p.images).collect();
            pairs.sort_unstable();
            return Ok(Some(DivisionWitness {
                power: n,
                seeds: chosen.iter().map(|&u| view.digits(u)).collect(),
                elements: pairs.iter().map(|&(u, _)| view.digits(u)).collect(),
                images: pairs.iter().map(|&(_, f)| f).collect(),
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u_plus() -> OrderedSemigroup {
        let s = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        OrderedSemigroup::new(s, &[(0, 1)]).unwrap()
    }

    fn g_top(n: usize) -> OrderedSemigroup {
        let rows = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| if i == n || j == n { n } else { (i + j) % n })
                    .collect()
            })
            .collect();
        let s = FiniteSemigroup::new(rows, None).unwrap();
        let pairs: Vec<_> = (0..n).map(|g| (g, n)).collect();
        OrderedSemigroup::new(s, &pairs).unwrap()
    }

    #[test]
    fn u_plus_divides_g_top() {
        let gt = g_top(3);
        let w = divides(&u_plus(), &gt, 1).unwrap().unwrap();
        assert_eq!(w.power, 1);
        assert_eq!(w.elements, vec![vec![0], vec![3]]);
        assert!(w.verify(&u_plus(), &gt).unwrap());
    }

    #[test]
    fn u_minus_does_not_divide_u_plus() {
        assert_eq!(divides(&u_plus().dual(), &u_plus(), 3).unwrap(), None);
    }

    #[test]
    fn trivial_divides_everything() {
        let t = OrderedSemigroup::trivial();
        let w = divides(&t, &g_top(2), 1).unwrap().unwrap();
        assert!(w.verify(&t, &g_top(2)).unwrap());
    }

    #[test]
    fn groups_need_matching_periods() {
        let c3 = OrderedSemigroup::unordered(g_top(3).subsemigroup(&[1]).unwrap().0.sgp().clone());
        assert_eq!(c3.size(), 3);
        assert!(divides(&c3, &g_top(2), 2).unwrap().is_none());
        assert!(divides(&c3, &g_top(3), 1).unwrap().is_some());
    }

    #[test]
    fn budget_is_reported() {
        let config = DivideConfig {
            power_bound: 3,
            node_budget: 10,
        };
        assert!(matches!(
            divides_with(&u_plus().dual(), &u_plus(), &config),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }
}
