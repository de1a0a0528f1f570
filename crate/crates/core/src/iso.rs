//! Isomorphism tests for small (ordered) semigroups.
//!
//! A bijection is fixed by the images of a generating set, so the search
//! backtracks over generator images only and extends along a spanning tree
//! of right multiplications, pruning on element invariants.

use crate::semigroup::{FiniteSemigroup, OrderedSemigroup};

/// A small generating set: the elements outside `S·S` are forced, the rest
/// are added greedily and redundant ones dropped afterwards.
pub fn generating_set(s: &FiniteSemigroup) -> Vec<usize> {
    let n = s.size();
    let mut is_product = vec![false; n];
    for a in 0..n {
        for b in 0..n {
            is_product[s.mul(a, b)] = true;
        }
    }
    let mut gens: Vec<usize> = (0..n).filter(|&x| !is_product[x]).collect();
    let mut covered = closure_mask(s, &gens);
    while let Some(first_missing) = covered.iter().position(|&c| !c) {
        let mut best = first_missing;
        let mut best_count = 0;
        for cand in 0..n {
            if covered[cand] {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(cand);
            let count = closure_mask(s, &trial).iter().filter(|&&c| c).count();
            if count > best_count {
                best = cand;
                best_count = count;
            }
        }
        gens.push(best);
        covered = closure_mask(s, &gens);
    }
    let mut i = 0;
    while i < gens.len() {
        let mut trial = gens.clone();
        trial.remove(i);
        if !trial.is_empty() && closure_mask(s, &trial).iter().all(|&c| c) {
            gens = trial;
        } else {
            i += 1;
        }
    }
    gens
}

fn closure_mask(s: &FiniteSemigroup, seed: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; s.size()];
    if seed.is_empty() {
        return mask;
    }
    for x in s.closure_of(seed) {
        mask[x] = true;
    }
    mask
}

/// Isomorphism-invariant data attached to each element.
fn signature(s: &FiniteSemigroup, x: usize) -> [usize; 6] {
    let n = s.size();
    let ip = s.index_period(x);
    let mut right = vec![false; n];
    let mut left = vec![false; n];
    let mut fixes = 0;
    for y in 0..n {
        right[s.mul(x, y)] = true;
        left[s.mul(y, x)] = true;
        if s.mul(x, y) == y {
            fixes += 1;
        }
    }
    [
        usize::from(s.is_idempotent(x)),
        ip.index,
        ip.period,
        right.iter().filter(|&&b| b).count(),
        left.iter().filter(|&&b| b).count(),
        fixes,
    ]
}

struct Search<'a> {
    a: &'a FiniteSemigroup,
    b: &'a FiniteSemigroup,
    order: Option<(&'a OrderedSemigroup, &'a OrderedSemigroup)>,
    gens: Vec<usize>,
    // (element, parent, generator) in discovery order, excluding generators
    tree: Vec<(usize, usize, usize)>,
    sig_a: Vec<[usize; 8]>,
    sig_b: Vec<[usize; 8]>,
}

impl Search<'_> {
    fn run(&self) -> Option<Vec<usize>> {
        let mut images = vec![usize::MAX; self.gens.len()];
        self.assign(0, &mut images)
    }

    fn assign(&self, k: usize, images: &mut Vec<usize>) -> Option<Vec<usize>> {
        if k == self.gens.len() {
            return self.extend(images);
        }
        let g = self.gens[k];
        for cand in 0..self.b.size() {
            if self.sig_a[g] != self.sig_b[cand] || images[..k].contains(&cand) {
                continue;
            }
            images[k] = cand;
            if let Some(f) = self.assign(k + 1, images) {
                return Some(f);
            }
        }
        images[k] = usize::MAX;
        None
    }

    fn extend(&self, images: &[usize]) -> Option<Vec<usize>> {
        let n = self.a.size();
        let mut f = vec![usize::MAX; n];
        let mut used = vec![false; n];
        for (&g, &img) in self.gens.iter().zip(images) {
            f[g] = img;
            used[img] = true;
        }
        for &(x, parent, gen) in &self.tree {
            let img = self.b.mul(f[parent], f[gen]);
            if used[img] || self.sig_a[x] != self.sig_b[img] {
                return None;
            }
            f[x] = img;
            used[img] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if f[self.a.mul(x, y)] != self.b.mul(f[x], f[y]) {
                    return None;
                }
            }
        }
        if let Some((oa, ob)) = self.order {
            for x in 0..n {
                for y in 0..n {
                    if oa.leq(x, y) != ob.leq(f[x], f[y]) {
                        return None;
                    }
                }
            }
        }
        Some(f)
    }
}

fn search(
    a: &FiniteSemigroup,
    b: &FiniteSemigroup,
    order: Option<(&OrderedSemigroup, &OrderedSemigroup)>,
) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let full_sig = |s: &FiniteSemigroup, o: Option<&OrderedSemigroup>, x: usize| {
        let base = signature(s, x);
        let (below, above) = match o {
            Some(o) => (
                (0..n).filter(|&y| o.leq(y, x)).count(),
                (0..n).filter(|&y| o.leq(x, y)).count(),
            ),
            None => (0, 0),
        };
        [
            base[0], base[1], base[2], base[3], base[4], base[5], below, above,
        ]
    };
    let sig_a: Vec<_> = (0..n).map(|x| full_sig(a, order.map(|o| o.0), x)).collect();
    let sig_b: Vec<_> = (0..n).map(|x| full_sig(b, order.map(|o| o.1), x)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generating_set(a);
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for &g in &gens {
        seen[g] = true;
        queue.push_back(g);
    }
    let mut tree = Vec::with_capacity(n);
    while let Some(x) = queue.pop_front() {
        for &g in &gens {
            let y = a.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                tree.push((y, x, g));
                queue.push_back(y);
            }
        }
    }
    Search {
        a,
        b,
        order,
        gens,
        tree,
        sig_a,
        sig_b,
    }
    .run()
}

/// A multiplicative bijection `a -> b`, if one exists.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    search(a, b, None)
}

pub fn is_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// A multiplicative bijection that preserves and reflects the order.
pub fn find_ordered_isomorphism(a: &OrderedSemigroup, b: &OrderedSemigroup) -> Option<Vec<usize>> {
    search(a.sgp(), b.sgp(), Some((a, b)))
}

pub fn is_isomorphic_ordered(a: &OrderedSemigroup, b: &OrderedSemigroup) -> bool {
    find_ordered_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteSemigroup {
        let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteSemigroup::new(rows, None).unwrap()
    }

    fn klein() -> FiniteSemigroup {
        let rows = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
        FiniteSemigroup::new(rows, None).unwrap()
    }

    #[test]
    fn generating_sets() {
        assert_eq!(generating_set(&cyclic(5)).len(), 1);
        assert_eq!(generating_set(&klein()).len(), 2);
        let c6 = cyclic(6);
        let c2c3 = cyclic(2).product(&cyclic(3));
        assert_eq!(generating_set(&c2c3).len(), 1);
        assert!(is_isomorphic(&c6, &c2c3));
    }

    #[test]
    fn non_isomorphic_groups() {
        assert!(!is_isomorphic(&cyclic(4), &klein()));
        assert!(!is_isomorphic(&cyclic(3), &cyclic(4)));
    }

    #[test]
    fn relabelled_table_is_isomorphic() {
        // conjugate C5 by the permutation i -> 4 - i
        let p = |i: usize| 4 - i;
        let c5 = cyclic(5);
        let rows = (0..5)
            .map(|i| (0..5).map(|j| p(c5.mul(p(i), p(j)))).collect())
            .collect();
        let d = FiniteSemigroup::new(rows, None).unwrap();
        let f = find_isomorphism(&c5, &d).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(f[c5.mul(x, y)], d.mul(f[x], f[y]));
            }
        }
    }

    #[test]
    fn order_matters() {
        let s = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        let up = OrderedSemigroup::new(s.clone(), &[(0, 1)]).unwrap();
        let down = up.dual();
        let flat = OrderedSemigroup::unordered(s);
        assert!(!is_isomorphic_ordered(&up, &down));
        assert!(!is_isomorphic_ordered(&up, &flat));
        assert!(is_isomorphic(up.sgp(), down.sgp()));
        assert!(is_isomorphic_ordered(&up, &up.dual().dual()));
    }

    #[test]
    fn left_and_right_zero_differ() {
        let l = FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap();
        let r = FiniteSemigroup::new(vec![vec![0, 1], vec![0, 1]], None).unwrap();
        assert!(!is_isomorphic(&l, &r));
        assert!(is_isomorphic(&l, &r.reversed()));
    }
}
