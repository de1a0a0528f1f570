/// Square boolean matrix, used for orders, quasiorders and Green's preorders.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    pub fn empty(n: usize) -> Self {
        BoolMatrix {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::empty(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn full(n: usize) -> Self {
        BoolMatrix {
            n,
            bits: vec![true; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(BoolMatrix {
            n,
            bits: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        BoolMatrix {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| *a || *b)
                .collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        BoolMatrix {
            n: self.n,
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| *a && *b)
                .collect(),
        }
    }

    /// Warshall's algorithm, in place.
    pub fn close_transitively(&mut self) {
        let n = self.n;
        for k in 0..n {
            for i in 0..n {
                if !self.get(i, k) {
                    continue;
                }
                for j in 0..n {
                    if self.get(k, j) {
                        self.set(i, j, true);
                    }
                }
            }
        }
    }

    pub fn reflexive_transitive_closure(&self) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.set(i, i, true);
        }
        m.close_transitively();
        m
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.get(j, k) && !self.get(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// First pair `i < j` related in both directions, if any.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) && self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_equality(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |i| (0..self.n).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.get(i, j))
    }

    /// Covering pairs of a partial order: `i < j` with nothing strictly between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.get(i, j) {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.get(i, k) && self.get(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Equivalence classes of `self ∩ selfᵀ`, numbered by first member.
    pub fn symmetric_classes(&self) -> Vec<usize> {
        let n = self.n;
        let mut class = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            for j in i..n {
                if class[j] == usize::MAX && self.get(i, j) && self.get(j, i) {
                    class[j] = next;
                }
            }
            next += 1;
        }
        class
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.bits.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }
}

impl std::fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BoolMatrix({})", self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
