//! Finite semigroups given by Cayley tables, stable orders on them, and the
//! basic structure theory used everywhere else: ω-powers, Green's relations,
//! products, duals, subsemigroups and homomorphism checks.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result, Side};
use crate::matrix::BoolMatrix;

/// Largest carrier accepted by the validating constructors.
pub const DEFAULT_SIZE_LIMIT: usize = 4096;

/// A finite semigroup stored as a dense row-major multiplication table.
///
/// Elements are `0..size`; labels are for display only. The ω-powers
/// `s^(ω-1)`, `s^ω` and `s^(ω+1)` of every element are computed once at
/// construction.
#[derive(Clone)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<usize>,
    labels: Vec<String>,
    // [s^(ω-1), s^ω, s^(ω+1)]
    omega: Vec<[usize; 3]>,
}

impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.table == other.table
    }
}

impl Eq for FiniteSemigroup {}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemigroup")
            .field("size", &self.size)
            .field("table", &self.rows())
            .finish()
    }
}

/// Index and period of the power sequence of an element: `s^i = s^(i+p)`
/// with `i` and `p` minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexPeriod {
    pub index: usize,
    pub period: usize,
}

impl IndexPeriod {
    /// The exponent `m` of the idempotent power: the multiple of the period
    /// lying in `[index, index + period)`.
    pub fn idempotent_exponent(&self) -> usize {
        let p = self.period;
        self.index.div_ceil(p) * p
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FiniteSemigroup {
    /// Validates a multiplication table. Entries must lie in range and the
    /// operation must be associative; the first failing triple is reported.
    pub fn new(rows: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        Self::with_limit(rows, labels, DEFAULT_SIZE_LIMIT)
    }

    pub fn with_limit(
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        limit: usize,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        if n > limit {
            return Err(Error::TooLarge { size: n, limit });
        }
        for (i, r) in rows.iter().enumerate() {
            for (j, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(Error::IndexOutOfRange {
                        i,
                        j,
                        value,
                        size: n,
                    });
                }
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::LengthMismatch {
                    what: "labels",
                    len: l.len(),
                    expected: n,
                });
            }
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        if let Some((i, j, k)) = associativity_violation(n, &table) {
            return Err(Error::NotAssociative { i, j, k });
        }
        Ok(Self::from_table_unchecked(
            n,
            table,
            labels.unwrap_or_else(|| default_labels(n)),
        ))
    }

    /// Builds a semigroup from a table already known to be associative.
    pub(crate) fn from_table_unchecked(size: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        debug_assert_eq!(labels.len(), size);
        let mut s = FiniteSemigroup {
            size,
            table,
            labels,
            omega: Vec::new(),
        };
        s.omega = (0..size)
            .map(|x| [s.shift_power(x, -1), s.shift_power(x, 0), s.shift_power(x, 1)])
            .collect();
        s
    }

    /// The one-element semigroup.
    pub fn trivial() -> Self {
        Self::from_table_unchecked(1, vec![0], vec!["1".into()])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = labels;
        self
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Product of a non-empty sequence of elements, left to right.
    pub fn product_of(&self, elements: &[usize]) -> usize {
        let (first, rest) = elements.split_first().expect("empty product");
        rest.iter().fold(*first, |acc, &x| self.mul(acc, x))
    }

    pub fn index_period(&self, s: usize) -> IndexPeriod {
        let mut seen = vec![usize::MAX; self.size];
        let mut x = s;
        let mut e = 1;
        loop {
            if seen[x] != usize::MAX {
                return IndexPeriod {
                    index: seen[x],
                    period: e - seen[x],
                };
            }
            seen[x] = e;
            x = self.mul(x, s);
            e += 1;
        }
    }

    /// `s^e` for `e >= 1` by repeated multiplication.
    pub fn power(&self, s: usize, e: usize) -> usize {
        assert!(e >= 1, "exponent must be positive");
        let mut acc = s;
        for _ in 1..e {
            acc = self.mul(acc, s);
        }
        acc
    }

    fn shift_power(&self, s: usize, k: i64) -> usize {
        let ip = self.index_period(s);
        let p = ip.period as i64;
        let mut m = ip.idempotent_exponent() as i64;
        while m + k < ip.index as i64 {
            m += p;
        }
        // reduce into [index, index + period) to keep the loop short
        let e = m + k;
        let i = ip.index as i64;
        let reduced = i + (e - i).rem_euclid(p);
        self.power(s, reduced as usize)
    }

    /// `s^(ω+k)`: the element at distance `k` from the idempotent power in
    /// the cyclic group part of the power sequence of `s`.
    pub fn omega_shift(&self, s: usize, k: i64) -> usize {
        match k {
            -1 => self.omega[s][0],
            0 => self.omega[s][1],
            1 => self.omega[s][2],
            _ => self.shift_power(s, k),
        }
    }

    /// `s^ω`, the unique idempotent power of `s`.
    #[inline]
    pub fn omega(&self, s: usize) -> usize {
        self.omega[s][1]
    }

    #[inline]
    pub fn omega_plus(&self, s: usize) -> usize {
        self.omega[s][2]
    }

    #[inline]
    pub fn omega_minus(&self, s: usize) -> usize {
        self.omega[s][0]
    }

    #[inline]
    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&s| self.is_idempotent(s)).collect()
    }

    /// First element not lying in a subgroup, if any.
    pub fn cr_violation(&self) -> Option<usize> {
        (0..self.size).find(|&s| self.omega_plus(s) != s)
    }

    pub fn is_completely_regular(&self) -> bool {
        self.cr_violation().is_none()
    }

    /// Inverse of `s` in its maximal subgroup, i.e. `s^(ω-1)`.
    pub fn cr_inverse(&self, s: usize) -> Result<usize> {
        if self.omega_plus(s) != s {
            return Err(Error::NotCompletelyRegular { witness: s });
        }
        Ok(self.omega_minus(s))
    }

    pub fn is_band(&self) -> bool {
        (0..self.size).all(|s| self.is_idempotent(s))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn green(&self) -> GreenData {
        GreenData::compute(self)
    }

    /// Whether the J-classes form a chain under the J-order.
    pub fn is_dch(&self) -> bool {
        let g = self.green();
        let reps = g.j_representatives();
        reps.iter().all(|&a| {
            reps.iter()
                .all(|&b| g.leq_j.get(a, b) || g.leq_j.get(b, a))
        })
    }

    /// Elements of the subsemigroup generated by `seed`, ascending.
    pub fn closure_of(&self, seed: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.size];
        let mut members = Vec::new();
        let mut queue = VecDeque::new();
        for &s in seed {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                        queue.push_back(p);
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        members
    }

    /// The subsemigroup on `elements` (ascending, closed under products).
    pub(crate) fn restrict(&self, elements: &[usize]) -> FiniteSemigroup {
        let mut pos = vec![usize::MAX; self.size];
        for (k, &e) in elements.iter().enumerate() {
            pos[e] = k;
        }
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in elements {
            for &b in elements {
                let p = pos[self.mul(a, b)];
                assert!(p != usize::MAX, "element set is not closed");
                table.push(p);
            }
        }
        let labels = elements.iter().map(|&e| self.labels[e].clone()).collect();
        FiniteSemigroup::from_table_unchecked(m, table, labels)
    }

    /// Direct product; the pair `(i, j)` has index `i * other.size() + j`.
    pub fn product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let (n, m) = (self.size, other.size);
        let size = n * m;
        let mut table = Vec::with_capacity(size * size);
        for a in 0..size {
            let (a1, a2) = (a / m, a % m);
            for b in 0..size {
                let (b1, b2) = (b / m, b % m);
                table.push(self.mul(a1, b1) * m + other.mul(a2, b2));
            }
        }
        let mut labels = Vec::with_capacity(size);
        for i in 0..n {
            for j in 0..m {
                labels.push(format!("({},{})", self.labels[i], other.labels[j]));
            }
        }
        FiniteSemigroup::from_table_unchecked(size, table, labels)
    }

    /// Semigroup with the reversed multiplication `a * b := b a`.
    pub fn reversed(&self) -> FiniteSemigroup {
        let n = self.size;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.mul(b, a);
            }
        }
        FiniteSemigroup::from_table_unchecked(n, table, self.labels.clone())
    }
}

fn associativity_violation(n: usize, table: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = table[i * n + j];
            for k in 0..n {
                if table[ij * n + k] != table[i * n + table[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

impl fmt::Display for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.labels.iter().map(|l| l.len()).max().unwrap_or(1);
        write!(f, "{:>w$} |", "")?;
        for l in &self.labels {
            write!(f, " {l:>w$}")?;
        }
        writeln!(f)?;
        for a in 0..self.size {
            write!(f, "{:>w$} |", self.labels[a])?;
            for b in 0..self.size {
                write!(f, " {:>w$}", self.labels[self.mul(a, b)])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// First witness that `rel` is not compatible with multiplication.
pub fn stability_violation(sgp: &FiniteSemigroup, rel: &BoolMatrix) -> Option<Error> {
    let n = sgp.size();
    for i in 0..n {
        for j in 0..n {
            if i == j || !rel.get(i, j) {
                continue;
            }
            for a in 0..n {
                if !rel.get(sgp.mul(a, i), sgp.mul(a, j)) {
                    return Some(Error::NotStable {
                        a,
                        i,
                        j,
                        side: Side::Left,
                    });
                }
                if !rel.get(sgp.mul(i, a), sgp.mul(j, a)) {
                    return Some(Error::NotStable {
                        a,
                        i,
                        j,
                        side: Side::Right,
                    });
                }
            }
        }
    }
    None
}

/// Reflexive, transitive and stable under multiplication on both sides.
pub fn is_stable_quasiorder(sgp: &FiniteSemigroup, rel: &BoolMatrix) -> bool {
    rel.size() == sgp.size()
        && rel.is_reflexive()
        && rel.is_transitive()
        && stability_violation(sgp, rel).is_none()
}

/// A stable quasiorder on a finite semigroup (antisymmetry not required).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableQuasiorder {
    rel: BoolMatrix,
}

impl StableQuasiorder {
    pub fn new(sgp: &FiniteSemigroup, rel: BoolMatrix) -> Result<Self> {
        if rel.size() != sgp.size() {
            return Err(Error::LengthMismatch {
                what: "relation",
                len: rel.size(),
                expected: sgp.size(),
            });
        }
        if !rel.is_reflexive() || !rel.is_transitive() {
            return Err(Error::NotQuasiorder);
        }
        if let Some(e) = stability_violation(sgp, &rel) {
            return Err(e);
        }
        Ok(StableQuasiorder { rel })
    }

    /// The least stable quasiorder containing `pairs`.
    pub fn generated_by(sgp: &FiniteSemigroup, pairs: &[(usize, usize)]) -> Self {
        let n = sgp.size();
        let mut rel = BoolMatrix::identity(n);
        let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
        while let Some((i, j)) = queue.pop_front() {
            if rel.get(i, j) {
                continue;
            }
            rel.set(i, j, true);
            for a in 0..n {
                queue.push_back((sgp.mul(a, i), sgp.mul(a, j)));
                queue.push_back((sgp.mul(i, a), sgp.mul(j, a)));
                if rel.get(j, a) {
                    queue.push_back((i, a));
                }
                if rel.get(a, i) {
                    queue.push_back((a, j));
                }
            }
        }
        StableQuasiorder { rel }
    }

    pub fn equality(n: usize) -> Self {
        StableQuasiorder {
            rel: BoolMatrix::identity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        StableQuasiorder {
            rel: BoolMatrix::full(n),
        }
    }

    #[inline]
    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    pub fn matrix(&self) -> &BoolMatrix {
        &self.rel
    }
}

/// Green's preorders and the class assignments of R, L, J and H.
#[derive(Debug, Clone)]
pub struct GreenData {
    pub leq_r: BoolMatrix,
    pub leq_l: BoolMatrix,
    pub leq_j: BoolMatrix,
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub j_class: Vec<usize>,
    pub h_class: Vec<usize>,
}

impl GreenData {
    fn compute(sgp: &FiniteSemigroup) -> Self {
        let n = sgp.size();
        let mut leq_r = BoolMatrix::identity(n);
        let mut leq_l = BoolMatrix::identity(n);
        for t in 0..n {
            for u in 0..n {
                leq_r.set(sgp.mul(t, u), t, true);
                leq_l.set(sgp.mul(u, t), t, true);
            }
        }
        let mut leq_j = leq_r.union(&leq_l);
        leq_j.close_transitively();
        let r_class = leq_r.symmetric_classes();
        let l_class = leq_l.symmetric_classes();
        let j_class = leq_j.symmetric_classes();
        let mut h_class = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if h_class[s] != usize::MAX {
                continue;
            }
            for t in s..n {
                if r_class[t] == r_class[s] && l_class[t] == l_class[s] {
                    h_class[t] = next;
                }
            }
            next += 1;
        }
        GreenData {
            leq_r,
            leq_l,
            leq_j,
            r_class,
            l_class,
            j_class,
            h_class,
        }
    }

    pub fn r_equiv(&self, s: usize, t: usize) -> bool {
        self.r_class[s] == self.r_class[t]
    }

    pub fn l_equiv(&self, s: usize, t: usize) -> bool {
        self.l_class[s] == self.l_class[t]
    }

    pub fn j_equiv(&self, s: usize, t: usize) -> bool {
        self.j_class[s] == self.j_class[t]
    }

    pub fn h_equiv(&self, s: usize, t: usize) -> bool {
        self.h_class[s] == self.h_class[t]
    }

    fn count(classes: &[usize]) -> usize {
        classes.iter().max().map_or(0, |m| m + 1)
    }

    pub fn num_r_classes(&self) -> usize {
        Self::count(&self.r_class)
    }

    pub fn num_l_classes(&self) -> usize {
        Self::count(&self.l_class)
    }

    pub fn num_j_classes(&self) -> usize {
        Self::count(&self.j_class)
    }

    pub fn num_h_classes(&self) -> usize {
        Self::count(&self.h_class)
    }

    /// Least element of each J-class, in class order.
    pub fn j_representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_j_classes()];
        for (s, &c) in self.j_class.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = s;
            }
        }
        reps
    }

    /// Members of the H-class of `s`, ascending.
    pub fn h_class_of(&self, s: usize) -> Vec<usize> {
        let c = self.h_class[s];
        (0..self.h_class.len())
            .filter(|&t| self.h_class[t] == c)
            .collect()
    }

    /// `s J st ⟹ s R st` and `s J ts ⟹ s L ts`; the first failing pair.
    pub fn stability_violation(&self, sgp: &FiniteSemigroup) -> Option<(usize, usize)> {
        let n = sgp.size();
        for s in 0..n {
            for t in 0..n {
                let st = sgp.mul(s, t);
                if self.j_equiv(s, st) && !self.r_equiv(s, st) {
                    return Some((s, t));
                }
                let ts = sgp.mul(t, s);
                if self.j_equiv(s, ts) && !self.l_equiv(s, ts) {
                    return Some((s, t));
                }
            }
        }
        None
    }
}

/// A finite semigroup with a stable partial order.
#[derive(Clone)]
pub struct OrderedSemigroup {
    name: String,
    sgp: FiniteSemigroup,
    order: BoolMatrix,
}

impl PartialEq for OrderedSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.sgp == other.sgp && self.order == other.order
    }
}

impl Eq for OrderedSemigroup {}

impl fmt::Debug for OrderedSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrderedSemigroup")
            .field("name", &self.name)
            .field("table", &self.sgp.rows())
            .field("order", &self.order.covering_pairs())
            .finish()
    }
}

impl OrderedSemigroup {
    /// Closes `pairs` reflexively and transitively, then accepts the result
    /// if it is antisymmetric and stable. No pairs gives the equality order.
    pub fn new(sgp: FiniteSemigroup, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = sgp.size();
        let mut gen = BoolMatrix::empty(n);
        for &(lo, hi) in pairs {
            if lo >= n || hi >= n {
                return Err(Error::OrderIndexOutOfRange { lo, hi });
            }
            gen.set(lo, hi, true);
        }
        Self::from_order_matrix(sgp, gen.reflexive_transitive_closure())
    }

    /// Accepts an order matrix that is already a partial order.
    pub fn from_order_matrix(sgp: FiniteSemigroup, order: BoolMatrix) -> Result<Self> {
        if order.size() != sgp.size() {
            return Err(Error::LengthMismatch {
                what: "order",
                len: order.size(),
                expected: sgp.size(),
            });
        }
        if !order.is_reflexive() || !order.is_transitive() {
            return Err(Error::NotQuasiorder);
        }
        if let Some((i, j)) = order.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { i, j });
        }
        if let Some(e) = stability_violation(&sgp, &order) {
            return Err(e);
        }
        Ok(OrderedSemigroup {
            name: String::new(),
            sgp,
            order,
        })
    }

    /// The semigroup ordered by equality.
    pub fn unordered(sgp: FiniteSemigroup) -> Self {
        let n = sgp.size();
        OrderedSemigroup {
            name: String::new(),
            sgp,
            order: BoolMatrix::identity(n),
        }
    }

    pub fn trivial() -> Self {
        Self::unordered(FiniteSemigroup::trivial()).with_name("trivial")
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sgp(&self) -> &FiniteSemigroup {
        &self.sgp
    }

    pub fn order(&self) -> &BoolMatrix {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.sgp.size()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.sgp.mul(a, b)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.get(a, b)
    }

    pub fn has_equality_order(&self) -> bool {
        self.order.is_equality()
    }

    /// The same semigroup ordered by equality.
    pub fn forget_order(&self) -> Self {
        Self::unordered(self.sgp.clone()).with_name(self.name.clone())
    }

    /// Componentwise product and order; `(i, j)` has index `i * |other| + j`.
    pub fn product(&self, other: &OrderedSemigroup) -> OrderedSemigroup {
        let sgp = self.sgp.product(&other.sgp);
        let (n, m) = (self.size(), other.size());
        let size = n * m;
        let mut order = BoolMatrix::empty(size);
        for a in 0..size {
            for b in 0..size {
                if self.leq(a / m, b / m) && other.leq(a % m, b % m) {
                    order.set(a, b, true);
                }
            }
        }
        let name = match (self.name.is_empty(), other.name.is_empty()) {
            (false, false) => format!("{} x {}", self.name, other.name),
            _ => String::new(),
        };
        OrderedSemigroup {
            name,
            sgp,
            order,
        }
    }

    /// `self^n` as iterated products, so tuples are encoded in mixed radix
    /// with the first coordinate most significant.
    pub fn power(&self, n: usize) -> OrderedSemigroup {
        assert!(n >= 1);
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self);
        }
        acc
    }

    /// Same table, reversed order.
    pub fn dual(&self) -> OrderedSemigroup {
        OrderedSemigroup {
            name: if self.name.is_empty() {
                String::new()
            } else {
                format!("dual({})", self.name)
            },
            sgp: self.sgp.clone(),
            order: self.order.transpose(),
        }
    }

    /// Least subsemigroup containing `seed`, with the induced order, and the
    /// embedding (new index to old index).
    pub fn subsemigroup(&self, seed: &[usize]) -> Result<(OrderedSemigroup, Vec<usize>)> {
        if seed.is_empty() {
            return Err(Error::EmptySeed);
        }
        if let Some(&bad) = seed.iter().find(|&&s| s >= self.size()) {
            return Err(Error::MapOutOfRange {
                index: 0,
                value: bad,
            });
        }
        let elements = self.sgp.closure_of(seed);
        Ok((self.induced(&elements), elements))
    }

    /// Restriction to a multiplicatively closed ascending element list.
    pub(crate) fn induced(&self, elements: &[usize]) -> OrderedSemigroup {
        let sgp = self.sgp.restrict(elements);
        let m = elements.len();
        let mut order = BoolMatrix::empty(m);
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                order.set(i, j, self.leq(a, b));
            }
        }
        OrderedSemigroup {
            name: String::new(),
            sgp,
            order,
        }
    }
}

/// Outcome of checking a map between ordered semigroups; each property
/// carries a counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    /// `(a, b)` with `f(ab) != f(a) f(b)`.
    pub multiplicative_failure: Option<(usize, usize)>,
    /// `(a, b)` with `a <= b` but not `f(a) <= f(b)`.
    pub isotone_failure: Option<(usize, usize)>,
    /// `(a, b)` with `a != b` and `f(a) == f(b)`.
    pub injective_failure: Option<(usize, usize)>,
    /// An element of the codomain outside the image.
    pub surjective_failure: Option<usize>,
}

impl HomomorphismReport {
    pub fn multiplicative(&self) -> bool {
        self.multiplicative_failure.is_none()
    }

    pub fn isotone(&self) -> bool {
        self.isotone_failure.is_none()
    }

    pub fn injective(&self) -> bool {
        self.injective_failure.is_none()
    }

    pub fn surjective(&self) -> bool {
        self.surjective_failure.is_none()
    }

    /// Multiplicative and isotone.
    pub fn is_homomorphism(&self) -> bool {
        self.multiplicative() && self.isotone()
    }
}

pub fn check_homomorphism(
    from: &OrderedSemigroup,
    to: &OrderedSemigroup,
    map: &[usize],
) -> Result<HomomorphismReport> {
    let n = from.size();
    if map.len() != n {
        return Err(Error::LengthMismatch {
            what: "map",
            len: map.len(),
            expected: n,
        });
    }
    if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v >= to.size()) {
        return Err(Error::MapOutOfRange { index, value });
    }
    let mut multiplicative_failure = None;
    let mut isotone_failure = None;
    'outer: for a in 0..n {
        for b in 0..n {
            if multiplicative_failure.is_none()
                && map[from.mul(a, b)] != to.mul(map[a], map[b])
            {
                multiplicative_failure = Some((a, b));
            }
            if isotone_failure.is_none() && from.leq(a, b) && !to.leq(map[a], map[b]) {
                isotone_failure = Some((a, b));
            }
            if multiplicative_failure.is_some() && isotone_failure.is_some() {
                break 'outer;
            }
        }
    }
    let mut first_preimage = vec![usize::MAX; to.size()];
    let mut injective_failure = None;
    for (a, &fa) in map.iter().enumerate() {
        if first_preimage[fa] == usize::MAX {
            first_preimage[fa] = a;
        } else if injective_failure.is_none() {
            injective_failure = Some((first_preimage[fa], a));
        }
    }
    let surjective_failure = first_preimage.iter().position(|&p| p == usize::MAX);
    Ok(HomomorphismReport {
        multiplicative_failure,
        isotone_failure,
        injective_failure,
        surjective_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteSemigroup {
        let rows = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        FiniteSemigroup::new(rows, None).unwrap()
    }

    fn u_plus() -> OrderedSemigroup {
        let s = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        OrderedSemigroup::new(s, &[(0, 1)]).unwrap()
    }

    fn left_zero() -> FiniteSemigroup {
        FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).unwrap()
    }

    fn g_top(n: usize) -> OrderedSemigroup {
        let top = n;
        let rows = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| if i == top || j == top { top } else { (i + j) % n })
                    .collect()
            })
            .collect();
        let s = FiniteSemigroup::new(rows, None).unwrap();
        let pairs: Vec<_> = (0..n).map(|g| (g, top)).collect();
        OrderedSemigroup::new(s, &pairs).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(u_plus().size(), 2);
        assert!(FiniteSemigroup::new(vec![vec![0, 0], vec![1, 1]], None).is_ok());
        // 0*0 = 1 swaps the zero: ((0*0)*1) = 0 but 0*(0*1) = 1
        assert_eq!(
            FiniteSemigroup::new(vec![vec![1, 0], vec![0, 0]], None).unwrap_err(),
            Error::NotAssociative { i: 0, j: 0, k: 1 }
        );
        assert_eq!(
            FiniteSemigroup::new(vec![], None).unwrap_err(),
            Error::EmptyCarrier
        );
        assert!(matches!(
            FiniteSemigroup::new(vec![vec![0, 2], vec![1, 1]], None),
            Err(Error::IndexOutOfRange { i: 0, j: 1, value: 2, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::with_limit(vec![vec![0; 3]; 3], None, 2),
            Err(Error::TooLarge { size: 3, limit: 2 })
        ));
    }

    #[test]
    fn validate_order_examples() {
        let l_less = OrderedSemigroup::new(left_zero(), &[(0, 1)]).unwrap();
        assert!(l_less.leq(0, 1) && !l_less.leq(1, 0));
        let eq = OrderedSemigroup::new(cyclic(3), &[]).unwrap();
        assert!(eq.has_equality_order());
        let up = FiniteSemigroup::new(vec![vec![0, 1], vec![1, 1]], None).unwrap();
        assert_eq!(
            OrderedSemigroup::new(up, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::NotAntisymmetric { i: 0, j: 1 }
        );
        // a group admits no non-trivial stable order
        assert!(matches!(
            OrderedSemigroup::new(cyclic(2), &[(0, 1)]),
            Err(Error::NotStable { .. })
        ));
    }

    #[test]
    fn omega_shift_examples() {
        let c2 = cyclic(2);
        assert_eq!(c2.omega_shift(1, 0), 0);
        let null = FiniteSemigroup::new(vec![vec![1, 1], vec![1, 1]], None).unwrap();
        assert_eq!(null.omega_shift(0, 0), 1);
        // the zero's group is trivial, so every shift lands on it
        assert_eq!(null.omega_shift(0, -1), 1);
        assert_eq!(null.omega_shift(0, 1), 1);
        let c3 = cyclic(3);
        assert_eq!(c3.omega_shift(1, 1), 1);
        assert_eq!(c3.omega_shift(1, -1), 2);
        assert_eq!(c3.omega_shift(1, 5), c3.omega_shift(1, 2));
        assert_eq!(c3.omega_shift(1, -4), c3.omega_shift(1, -1));
    }

    #[test]
    fn index_period_of_nilpotent_tail() {
        // x -> x+1 capped at 3 under addition: 1,2,3,3,...
        let rows = (0..4)
            .map(|i| (0..4).map(|j| (i + j + 1).min(3)).collect())
            .collect();
        let s = FiniteSemigroup::new(rows, None).unwrap();
        // element 0 plays the role of 1; its powers are 0,1,2,3,3
        let ip = s.index_period(0);
        assert_eq!(ip, IndexPeriod { index: 4, period: 1 });
        assert_eq!(ip.idempotent_exponent(), 4);
        assert_eq!(s.omega(0), 3);
    }

    #[test]
    fn idempotents_and_inverses() {
        assert_eq!(u_plus().sgp().idempotents(), vec![0, 1]);
        assert_eq!(cyclic(3).idempotents(), vec![0]);
        assert_eq!(g_top(2).sgp().idempotents(), vec![0, 2]);
        let l = left_zero();
        assert!(l.is_completely_regular());
        assert_eq!(l.cr_inverse(1).unwrap(), 1);
        let null = FiniteSemigroup::new(vec![vec![1, 1], vec![1, 1]], None).unwrap();
        assert!(!null.is_completely_regular());
        assert_eq!(null.cr_violation(), Some(0));
        assert_eq!(
            null.cr_inverse(0).unwrap_err(),
            Error::NotCompletelyRegular { witness: 0 }
        );
        assert_eq!(cyclic(3).cr_inverse(1).unwrap(), 2);
    }

    #[test]
    fn green_examples() {
        let g = left_zero().green();
        assert_eq!(g.num_r_classes(), 2);
        assert_eq!(g.num_l_classes(), 1);
        assert_eq!(g.num_j_classes(), 1);
        assert_eq!(cyclic(4).green().num_h_classes(), 1);
        let gt = g_top(2);
        let gd = gt.sgp().green();
        assert_eq!(gd.num_j_classes(), 2);
        assert!(gd.j_equiv(0, 1));
        assert!(gd.leq_j.get(2, 0) && !gd.leq_j.get(0, 2));
    }

    #[test]
    fn products_and_duals() {
        let up = u_plus();
        let um = up.dual();
        let p = up.product(&um);
        assert_eq!(p.size(), 4);
        // the middle elements (1,T) and (T,1) are J-incomparable
        let g = p.sgp().green();
        assert!(!g.leq_j.get(1, 2) && !g.leq_j.get(2, 1));
        assert!(p.leq(1, 2));
        assert!(!p.sgp().is_dch());
        assert_eq!(um.dual(), up);
        let t = OrderedSemigroup::trivial();
        assert_eq!(up.product(&t), up);
    }

    #[test]
    fn subsemigroup_examples() {
        let gt = g_top(3);
        let (sub, emb) = gt.subsemigroup(&[0, 3]).unwrap();
        assert_eq!(emb, vec![0, 3]);
        assert_eq!(sub, u_plus());
        let (all, emb) = gt.subsemigroup(&[1, 3]).unwrap();
        assert_eq!(all, gt);
        assert_eq!(emb, vec![0, 1, 2, 3]);
        assert_eq!(gt.subsemigroup(&[]).unwrap_err(), Error::EmptySeed);
    }

    #[test]
    fn homomorphism_examples() {
        let gt = g_top(2);
        let id: Vec<usize> = (0..3).collect();
        let r = check_homomorphism(&gt, &gt, &id).unwrap();
        assert!(r.multiplicative() && r.isotone() && r.injective() && r.surjective());
        // s -> s^ω into the idempotents {e, T} = U+
        let phi = vec![0, 0, 1];
        let r = check_homomorphism(&gt, &u_plus(), &phi).unwrap();
        assert!(r.is_homomorphism() && r.surjective());
        assert_eq!(r.injective_failure, Some((0, 1)));
        let c3 = OrderedSemigroup::unordered(cyclic(3));
        let r = check_homomorphism(&c3, &c3, &[1, 1, 1]).unwrap();
        assert_eq!(r.multiplicative_failure, Some((0, 0)));
    }

    #[test]
    fn quasiorders() {
        let s = g_top(2);
        let n = s.size();
        assert!(is_stable_quasiorder(s.sgp(), &BoolMatrix::identity(n)));
        assert!(is_stable_quasiorder(s.sgp(), &BoolMatrix::full(n)));
        let mut broken = BoolMatrix::identity(3);
        broken.set(0, 1, true);
        broken.set(1, 2, true);
        assert!(!is_stable_quasiorder(s.sgp(), &broken));
        let q = StableQuasiorder::generated_by(s.sgp(), &[(0, 2)]);
        // e <= T forces g = g e <= g T = T
        assert!(q.holds(1, 2));
        assert!(StableQuasiorder::new(s.sgp(), q.matrix().clone()).is_ok());
    }

    #[test]
    fn dch() {
        assert!(left_zero().is_dch());
        assert!(g_top(2).sgp().is_dch());
    }
}
