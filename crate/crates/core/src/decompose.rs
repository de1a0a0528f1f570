//! Concrete constructions: groups with an adjoined top, bottom or zero, the
//! standard small generators, the idempotent projection, the embeddings into
//! products of idempotents and (topped) maximal subgroups, and the free
//! normal band with its word problem.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::BoolMatrix;
use crate::semigroup::{
    check_homomorphism, FiniteSemigroup, HomomorphismReport, OrderedSemigroup, DEFAULT_SIZE_LIMIT,
};
use crate::terms::OmegaTerm;
use crate::varieties::{holds, member_with, rel};

fn ensure_group(g: &OrderedSemigroup) -> Result<()> {
    let m = member_with(g, "G", true)?;
    match m.failure {
        Some((r, _)) => Err(Error::NotAGroup {
            relation: r.to_string(),
        }),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Adjoined {
    Top,
    Bottom,
    Zero,
}

fn adjoin(g: &OrderedSemigroup, how: Adjoined) -> Result<OrderedSemigroup> {
    ensure_group(g)?;
    let n = g.size();
    let z = n;
    let mut rows = Vec::with_capacity(n + 1);
    for a in 0..=n {
        rows.push(
            (0..=n)
                .map(|b| if a == z || b == z { z } else { g.mul(a, b) })
                .collect(),
        );
    }
    let mut labels = g.sgp().labels().to_vec();
    let mut extra = match how {
        Adjoined::Top => "top",
        Adjoined::Bottom => "bot",
        Adjoined::Zero => "zero",
    }
    .to_string();
    while labels.contains(&extra) {
        extra.push('\'');
    }
    labels.push(extra);
    let sgp = FiniteSemigroup::new(rows, Some(labels))?;
    let mut order = BoolMatrix::identity(n + 1);
    for a in 0..n {
        for b in 0..n {
            order.set(a, b, g.leq(a, b));
        }
        match how {
            Adjoined::Top => order.set(a, z, true),
            Adjoined::Bottom => order.set(z, a, true),
            Adjoined::Zero => {}
        }
    }
    let suffix = match how {
        Adjoined::Top => "^top",
        Adjoined::Bottom => "^bot",
        Adjoined::Zero => "^0",
    };
    let name = if g.name().is_empty() {
        String::new()
    } else {
        format!("{}{suffix}", g.name())
    };
    Ok(OrderedSemigroup::from_order_matrix(sgp, order)?.with_name(name))
}

/// `G^⊤`: a zero adjoined as the maximum; the zero is the last element.
pub fn adjoin_top(g: &OrderedSemigroup) -> Result<OrderedSemigroup> {
    adjoin(g, Adjoined::Top)
}

/// `G^⊥`: a zero adjoined as the minimum.
pub fn adjoin_bottom(g: &OrderedSemigroup) -> Result<OrderedSemigroup> {
    adjoin(g, Adjoined::Bottom)
}

/// `G⁰`: a zero adjoined, ordered by equality.
pub fn adjoin_zero(g: &OrderedSemigroup) -> Result<OrderedSemigroup> {
    adjoin(g, Adjoined::Zero)
}

/// The cyclic group of order `k` on `e, g, g2, ...`.
pub fn cyclic_group(k: usize) -> OrderedSemigroup {
    assert!(k >= 1);
    let rows = (0..k).map(|i| (0..k).map(|j| (i + j) % k).collect()).collect();
    let labels = (0..k)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    let sgp = FiniteSemigroup::new(rows, Some(labels)).expect("cyclic groups are associative");
    let name = if k == 1 { "trivial".into() } else { format!("C{k}") };
    OrderedSemigroup::unordered(sgp).with_name(name)
}

/// The symmetric group on three points, permutations in lexicographic order.
pub fn symmetric_group_3() -> OrderedSemigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    // (p q)(i) = q(p(i)): apply p first
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index([q[p[0]], q[p[1]], q[p[2]]]))
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| format!("{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1))
        .collect();
    let sgp = FiniteSemigroup::new(rows, Some(labels)).expect("permutation composition is associative");
    OrderedSemigroup::unordered(sgp).with_name("S3")
}

fn two_element(rows: Vec<Vec<usize>>, labels: [&str; 2], pairs: &[(usize, usize)], name: &str) -> OrderedSemigroup {
    let sgp = FiniteSemigroup::new(rows, Some(labels.iter().map(|s| s.to_string()).collect()))
        .expect("standard tables are associative");
    OrderedSemigroup::new(sgp, pairs)
        .expect("standard orders are stable")
        .with_name(name)
}

/// The completely simple semigroup `M[C2; 2, 2; P]` with sandwich matrix
/// `P = [[e, e], [e, g]]`; its idempotents do not form a subsemigroup.
pub fn rees_example() -> OrderedSemigroup {
    // element (i, h, l) has index 4i + 2l + h
    let p = [[0usize, 0], [0, 1]];
    let decode = |x: usize| (x / 4, x % 2, (x / 2) % 2);
    let rows = (0..8)
        .map(|a| {
            let (i, g, l) = decode(a);
            (0..8)
                .map(|b| {
                    let (j, h, m) = decode(b);
                    4 * i + 2 * m + (g + p[l][j] + h) % 2
                })
                .collect()
        })
        .collect();
    let labels = (0..8)
        .map(|x| {
            let (i, g, l) = decode(x);
            format!("({},{},{})", i + 1, if g == 0 { "e" } else { "g" }, l + 1)
        })
        .collect();
    let sgp = FiniteSemigroup::new(rows, Some(labels)).expect("Rees matrix semigroups are associative");
    OrderedSemigroup::unordered(sgp).with_name("Rees")
}

/// Canonical form of a word in the free band, built from the forms of its
/// left and right factorizations at the last new letter.
fn band_key(w: &[usize]) -> String {
    let mut content: Vec<usize> = w.to_vec();
    content.sort_unstable();
    content.dedup();
    if content.len() == 1 {
        return content[0].to_string();
    }
    let split = |word: &mut dyn Iterator<Item = (usize, usize)>| {
        let mut seen = BTreeSet::new();
        for (i, a) in word {
            if seen.insert(a) && seen.len() == content.len() {
                return (i, a);
            }
        }
        unreachable!("the word has full content")
    };
    let (i, a) = split(&mut w.iter().copied().enumerate());
    let (j, b) = split(&mut w.iter().copied().enumerate().rev());
    format!("[{}|{a}|{b}|{}]", band_key(&w[..i]), band_key(&w[j + 1..]))
}

/// The free band on `k` generators, by closing the letters under products
/// of representative words. Two letters give 6 elements, three give 159.
pub fn free_band(k: usize) -> OrderedSemigroup {
    assert!((1..=3).contains(&k), "free bands are only built on up to three letters");
    let mut words: Vec<Vec<usize>> = (0..k).map(|a| vec![a]).collect();
    let mut index: HashMap<String, usize> = words.iter().enumerate().map(|(i, w)| (band_key(w), i)).collect();
    let mut products: HashMap<(usize, usize), usize> = HashMap::new();
    let mut i = 0;
    while i < words.len() {
        for j in 0..=i {
            for (a, b) in [(i, j), (j, i)] {
                let mut w = words[a].clone();
                w.extend_from_slice(&words[b]);
                let key = band_key(&w);
                let next = words.len();
                let id = *index.entry(key).or_insert(next);
                if id == next {
                    words.push(w);
                }
                products.insert((a, b), id);
            }
        }
        i += 1;
    }
    let n = words.len();
    let rows = (0..n).map(|a| (0..n).map(|b| products[&(a, b)]).collect()).collect();
    let labels = words
        .iter()
        .map(|w| w.iter().map(|&a| crate::terms::letter_name(a)).collect::<String>())
        .collect();
    let sgp = FiniteSemigroup::new(rows, Some(labels)).expect("free band table is associative");
    OrderedSemigroup::unordered(sgp).with_name(format!("FB{k}"))
}

fn parse_order(spec: &str) -> Option<usize> {
    spec.parse().ok().filter(|&k| k >= 1)
}

/// Names of the built-in examples understood by [`standard_example`].
pub const STANDARD_NAMES: [&str; 17] = [
    "U+", "U-", "L", "R", "L<", "R<", "C:k", "trivial", "S3", "C2xC2", "Gtop:k", "Gbot:k",
    "Gzero:k", "FB2", "FB3", "Rees", "Ck",
];

pub fn standard_example(name: &str) -> Result<OrderedSemigroup> {
    let unknown = || Error::UnknownName(name.to_string());
    let cyclic_arg = |rest: &str| parse_order(rest).ok_or_else(unknown);
    Ok(match name {
        "U+" => two_element(vec![vec![0, 1], vec![1, 1]], ["1", "top"], &[(0, 1)], "U+"),
        "U-" => two_element(vec![vec![0, 1], vec![1, 1]], ["1", "bot"], &[(1, 0)], "U-"),
        "L" => two_element(vec![vec![0, 0], vec![1, 1]], ["a", "b"], &[], "L"),
        "R" => two_element(vec![vec![0, 1], vec![0, 1]], ["a", "b"], &[], "R"),
        "L<" => two_element(vec![vec![0, 0], vec![1, 1]], ["a", "b"], &[(0, 1)], "L<"),
        "R<" => two_element(vec![vec![0, 1], vec![0, 1]], ["a", "b"], &[(0, 1)], "R<"),
        "trivial" => cyclic_group(1),
        "S3" => symmetric_group_3(),
        "C2xC2" => {
            let c2 = cyclic_group(2);
            c2.product(&c2).with_name("C2xC2")
        }
        "FB2" => free_band(2),
        "FB3" => free_band(3),
        "Rees" => rees_example(),
        _ => {
            if let Some(rest) = name.strip_prefix("C:") {
                cyclic_group(cyclic_arg(rest)?)
            } else if let Some(rest) = name.strip_prefix("Gtop:") {
                adjoin_top(&cyclic_group(cyclic_arg(rest)?))?
            } else if let Some(rest) = name.strip_prefix("Gbot:") {
                adjoin_bottom(&cyclic_group(cyclic_arg(rest)?))?
            } else if let Some(rest) = name.strip_prefix("Gzero:") {
                adjoin_zero(&cyclic_group(cyclic_arg(rest)?))?
            } else if let Some(rest) = name.strip_prefix('C') {
                cyclic_group(cyclic_arg(rest)?)
            } else {
                return Err(unknown());
            }
        }
    })
}

fn ensure_nocr(a: &OrderedSemigroup) -> Result<()> {
    let m = member_with(a, "NOCR", true)?;
    match m.failure {
        Some((r, c)) => Err(Error::NotNocr {
            relation: r.to_string(),
            assignment: c.dense(),
        }),
        None => Ok(()),
    }
}

/// The map `s ↦ s^ω` checked as an endomorphism; on completely regular
/// semigroups that are not orthodox it fails to be multiplicative.
pub fn omega_map(a: &OrderedSemigroup) -> Result<(Vec<usize>, HomomorphismReport)> {
    let map: Vec<usize> = (0..a.size()).map(|s| a.sgp().omega(s)).collect();
    let report = check_homomorphism(a, a, &map)?;
    Ok((map, report))
}

/// `φ: A → E(A)`, `s ↦ s^ω`, with `E(A)` as an ordered subsemigroup.
#[derive(Debug, Clone)]
pub struct Projection {
    pub image: OrderedSemigroup,
    /// Element of `A` for each element of the image.
    pub idempotents: Vec<usize>,
    /// `map[s]` is the image index of `s^ω`.
    pub map: Vec<usize>,
    pub report: HomomorphismReport,
}

pub fn idempotent_projection(a: &OrderedSemigroup) -> Result<Projection> {
    ensure_nocr(a)?;
    let idempotents = a.sgp().idempotents();
    let image = a.induced(&idempotents);
    let pos: HashMap<usize, usize> = idempotents.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let map: Vec<usize> = (0..a.size()).map(|s| pos[&a.sgp().omega(s)]).collect();
    let report = check_homomorphism(a, &image, &map)?;
    Ok(Projection {
        image,
        idempotents,
        map,
        report,
    })
}

/// The maximal subgroup `H_e` with the induced order, and its elements in `A`.
pub fn maximal_subgroup(a: &OrderedSemigroup, e: usize) -> (OrderedSemigroup, Vec<usize>) {
    let members = a.sgp().green().h_class_of(e);
    (a.induced(&members), members)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Top,
    Bottom,
    Zero,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "top" => Ok(Variant::Top),
            "bottom" => Ok(Variant::Bottom),
            "zero" => Ok(Variant::Zero),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// What a factor of the target product is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FactorKind {
    /// `E(A)`.
    Idempotents,
    /// `H_e` itself.
    Group { idempotent: usize },
    /// `H_e` with an adjoined top, bottom or zero.
    AdjoinedGroup { idempotent: usize, variant: Variant },
}

#[derive(Debug, Clone)]
pub struct Factor {
    pub kind: FactorKind,
    pub semigroup: OrderedSemigroup,
}

/// Outcome of validating an embedding componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Validation {
    pub multiplicative: bool,
    pub isotone: bool,
    pub injective: bool,
    pub reflects_order: bool,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.multiplicative && self.isotone && self.injective
    }
}

/// An embedding of `source` into the product of `factors`.
#[derive(Debug, Clone)]
pub struct DecompositionCertificate {
    pub source: OrderedSemigroup,
    pub factors: Vec<Factor>,
    /// Coordinates of each source element, one per factor.
    pub coordinates: Vec<Vec<usize>>,
    /// Index of each source element in the product, first factor most
    /// significant.
    pub embedding: Vec<usize>,
    pub validation: Validation,
}

/// Targets larger than this are not materialized.
pub const TARGET_LIMIT: usize = DEFAULT_SIZE_LIMIT;

impl DecompositionCertificate {
    fn build(source: &OrderedSemigroup, factors: Vec<Factor>, coordinates: Vec<Vec<usize>>) -> Self {
        let mut embedding = Vec::with_capacity(coordinates.len());
        for c in &coordinates {
            let mut idx = 0;
            for (k, f) in factors.iter().enumerate() {
                idx = idx * f.semigroup.size() + c[k];
            }
            embedding.push(idx);
        }
        let mut cert = DecompositionCertificate {
            source: source.clone(),
            factors,
            coordinates,
            embedding,
            validation: Validation {
                multiplicative: false,
                isotone: false,
                injective: false,
                reflects_order: false,
            },
        };
        cert.validation = cert.validate();
        cert
    }

    pub fn target_size(&self) -> usize {
        self.factors.iter().map(|f| f.semigroup.size()).product()
    }

    /// Checks the embedding factor by factor, without forming the product.
    pub fn validate(&self) -> Validation {
        let a = &self.source;
        let n = a.size();
        let c = &self.coordinates;
        let mut multiplicative = true;
        let mut isotone = true;
        let mut reflects_order = true;
        for s in 0..n {
            for t in 0..n {
                let st = a.mul(s, t);
                if multiplicative
                    && self
                        .factors
                        .iter()
                        .enumerate()
                        .any(|(k, f)| c[st][k] != f.semigroup.mul(c[s][k], c[t][k]))
                {
                    multiplicative = false;
                }
                let below = self
                    .factors
                    .iter()
                    .enumerate()
                    .all(|(k, f)| f.semigroup.leq(c[s][k], c[t][k]));
                if a.leq(s, t) && !below {
                    isotone = false;
                }
                if below && !a.leq(s, t) {
                    reflects_order = false;
                }
            }
        }
        let distinct: BTreeSet<&Vec<usize>> = c.iter().collect();
        Validation {
            multiplicative,
            isotone,
            injective: distinct.len() == n,
            reflects_order,
        }
    }

    /// The product of the factors, when it has at most [`TARGET_LIMIT`]
    /// elements.
    pub fn target(&self) -> Option<OrderedSemigroup> {
        if self.target_size() > TARGET_LIMIT {
            return None;
        }
        let mut it = self.factors.iter();
        let first = it.next()?.semigroup.clone();
        Some(it.fold(first, |acc, f| acc.product(&f.semigroup)))
    }

    /// The image of the source inside the materialized target.
    pub fn image(&self) -> Option<(OrderedSemigroup, Vec<usize>)> {
        let target = self.target()?;
        target.subsemigroup(&self.embedding).ok()
    }
}

/// `α(s) = (s^ω, e s e)` into `E(A) × H_e` for the least idempotent `e`;
/// requires `x^ω = x^ω y^ω x^ω`.
pub fn rectangular_group_embedding(a: &OrderedSemigroup) -> Result<DecompositionCertificate> {
    ensure_nocr(a)?;
    let hyp = rel("x^w = x^w y^w x^w");
    if !holds(a, &hyp) {
        return Err(Error::HypothesisFailed {
            relation: hyp.to_string(),
        });
    }
    let proj = idempotent_projection(a)?;
    let e = proj.idempotents[0];
    let (h, members) = maximal_subgroup(a, e);
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut coordinates = Vec::with_capacity(a.size());
    for s in 0..a.size() {
        let ese = a.mul(a.mul(e, s), e);
        let g = *pos.get(&ese).ok_or_else(|| Error::HypothesisFailed {
            relation: format!("e s e in H_e for e = {}", a.sgp().label(e)),
        })?;
        coordinates.push(vec![proj.map[s], g]);
    }
    let factors = vec![
        Factor {
            kind: FactorKind::Idempotents,
            semigroup: proj.image.clone().with_name("E"),
        },
        Factor {
            kind: FactorKind::Group { idempotent: e },
            semigroup: h.with_name(format!("H{e}")),
        },
    ];
    Ok(DecompositionCertificate::build(a, factors, coordinates))
}

/// `α(s) = (s^ω, (ψ_e(s))_e)` into `E(A) × ∏_e H_e^⊤` with
/// `ψ_e(x) = e x e` when `e x^ω e = e` and `⊤` otherwise. The bottom
/// variant uses `H_e^⊥` under the dual inequality; the zero variant uses
/// `H_e⁰` and needs the equality order.
pub fn nocr_embedding(a: &OrderedSemigroup, variant: Variant) -> Result<DecompositionCertificate> {
    ensure_nocr(a)?;
    match variant {
        Variant::Top => {
            let hyp = rel("x^w <= x^w y^w x^w");
            if !holds(a, &hyp) {
                return Err(Error::HypothesisFailed {
                    relation: hyp.to_string(),
                });
            }
        }
        Variant::Bottom => {
            let hyp = rel("x^w y^w x^w <= x^w");
            if !holds(a, &hyp) {
                return Err(Error::HypothesisFailed {
                    relation: hyp.to_string(),
                });
            }
        }
        Variant::Zero => {
            if !a.has_equality_order() {
                return Err(Error::OrderNotEquality);
            }
        }
    }
    let proj = idempotent_projection(a)?;
    let mut factors = vec![Factor {
        kind: FactorKind::Idempotents,
        semigroup: proj.image.clone().with_name("E"),
    }];
    let mut coordinates: Vec<Vec<usize>> = proj.map.iter().map(|&m| vec![m]).collect();
    let s = a.sgp();
    for &e in &proj.idempotents {
        let (h, members) = maximal_subgroup(a, e);
        let h = h.with_name(format!("H{e}"));
        let adjoined = match variant {
            Variant::Top => adjoin_top(&h)?,
            Variant::Bottom => adjoin_bottom(&h)?,
            Variant::Zero => adjoin_zero(&h)?,
        };
        let extra = h.size();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        for x in 0..a.size() {
            let c = if s.mul(s.mul(e, s.omega(x)), e) == e {
                let exe = s.mul(s.mul(e, x), e);
                *pos.get(&exe).ok_or_else(|| Error::HypothesisFailed {
                    relation: format!("e x e in H_e for e = {}", s.label(e)),
                })?
            } else {
                extra
            };
            coordinates[x].push(c);
        }
        factors.push(Factor {
            kind: FactorKind::AdjoinedGroup {
                idempotent: e,
                variant,
            },
            semigroup: adjoined,
        });
    }
    Ok(DecompositionCertificate::build(a, factors, coordinates))
}

/// An element `(first, content, last)` of a free normal band; the content
/// is a bit set over the letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NbElement {
    pub first: usize,
    pub content: u32,
    pub last: usize,
}

impl std::ops::Mul for NbElement {
    type Output = NbElement;

    // contents are unioned, hence `|`
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: NbElement) -> NbElement {
        NbElement {
            first: self.first,
            content: self.content | other.content,
            last: other.last,
        }
    }
}

impl NbElement {
    pub fn letter(v: usize) -> Self {
        NbElement {
            first: v,
            content: 1 << v,
            last: v,
        }
    }


    pub fn letters(&self) -> Vec<usize> {
        (0..32).filter(|&i| self.content >> i & 1 == 1).collect()
    }

    /// Evaluates a term over its letters; powers act as the identity since
    /// every element is idempotent.
    pub fn eval(t: &OmegaTerm) -> NbElement {
        match t {
            OmegaTerm::Var(v) => NbElement::letter(*v),
            OmegaTerm::Concat(parts) => parts[1..]
                .iter()
                .fold(NbElement::eval(&parts[0]), |acc, p| acc * NbElement::eval(p)),
            OmegaTerm::Pow(b, _) => NbElement::eval(b),
        }
    }
}

pub const MAX_FREE_LETTERS: usize = 8;

/// The free normal band on `k` letters with its elements decoded, ordered
/// by content size, content, first and last letter. Eight letters give
/// 4608 elements, above the default carrier limit.
pub fn free_normal_band(k: usize) -> Result<(FiniteSemigroup, Vec<NbElement>)> {
    free_normal_band_with_limit(k, DEFAULT_SIZE_LIMIT)
}

pub fn free_normal_band_with_limit(k: usize, limit: usize) -> Result<(FiniteSemigroup, Vec<NbElement>)> {
    if k == 0 || k > MAX_FREE_LETTERS {
        return Err(Error::TooManyLetters {
            letters: k,
            max: MAX_FREE_LETTERS,
        });
    }
    let mut contents: Vec<u32> = (1..(1u32 << k)).collect();
    let letters_of = |c: u32| -> Vec<usize> { (0..k).filter(|&i| c >> i & 1 == 1).collect() };
    contents.sort_by_key(|&c| (c.count_ones(), letters_of(c)));
    let mut elements = Vec::new();
    for c in contents {
        let ls = letters_of(c);
        for &f in &ls {
            for &l in &ls {
                elements.push(NbElement {
                    first: f,
                    content: c,
                    last: l,
                });
            }
        }
    }
    let n = elements.len();
    if n > limit {
        return Err(Error::TooLarge { size: n, limit });
    }
    let pos: HashMap<NbElement, usize> = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut table = Vec::with_capacity(n * n);
    for &a in &elements {
        for &b in &elements {
            table.push(pos[&(a * b)]);
        }
    }
    let labels = elements
        .iter()
        .map(|e| {
            let name = |v: usize| crate::terms::letter_name(v);
            let c: Vec<String> = letters_of(e.content).into_iter().map(name).collect();
            format!("({},{{{}}},{})", name(e.first), c.join(","), name(e.last))
        })
        .collect();
    Ok((FiniteSemigroup::from_table_unchecked(n, table, labels), elements))
}

/// Normal bands identify `u` and `v` exactly when content, first letter and
/// last letter agree.
pub fn nb_word_problem(u: &OmegaTerm, v: &OmegaTerm) -> bool {
    u.content() == v.content() && u.first_letter() == v.first_letter() && u.last_letter() == v.last_letter()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic_ordered;
    use crate::terms::parse_term;
    use crate::varieties::is_member;

    fn ex(name: &str) -> OrderedSemigroup {
        standard_example(name).unwrap()
    }

    #[test]
    fn adjoined_groups() {
        assert_eq!(adjoin_top(&ex("trivial")).unwrap(), ex("U+"));
        assert_eq!(adjoin_bottom(&ex("trivial")).unwrap(), ex("U-"));
        assert_eq!(ex("U-"), ex("U+").dual());
        let gt = adjoin_top(&ex("C2")).unwrap();
        assert!(holds(&gt, &rel("x^w <= x^w y^w x^w")));
        assert!(!holds(&gt, &rel("x^w y^w x^w <= x^w")));
        let g0 = adjoin_zero(&ex("C3")).unwrap();
        assert!(g0.has_equality_order());
        assert!(matches!(adjoin_top(&ex("U+")), Err(Error::NotAGroup { .. })));
    }

    #[test]
    fn standard_examples() {
        let l = ex("L");
        assert_eq!(l.sgp().rows(), vec![vec![0, 0], vec![1, 1]]);
        assert!(l.has_equality_order());
        assert_eq!(ex("C:3").size(), 3);
        assert_eq!(ex("C:3"), ex("C3"));
        assert!(is_member(&ex("C:3"), "G"));
        let ll = ex("L<");
        assert!(ll.leq(0, 1) && !ll.leq(1, 0));
        assert_eq!(ex("S3").size(), 6);
        assert!(!ex("S3").sgp().is_commutative());
        assert!(is_member(&ex("S3"), "G"));
        assert!(is_member(&ex("C2xC2"), "G"));
        assert_eq!(ex("FB2").size(), 6);
        assert!(is_member(&ex("FB2"), "B"));
        // on two letters the free band is already normal
        assert!(is_member(&ex("FB2"), "NB"));
        assert_eq!(ex("FB3").size(), 159);
        assert!(!is_member(&ex("FB3"), "NB"));
        assert!(is_member(&ex("Rees"), "CR"));
        assert!(!is_member(&ex("Rees"), "OCR"));
        assert!(matches!(standard_example("C:0"), Err(Error::UnknownName(_))));
        assert!(matches!(standard_example("Q8"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn projection_examples() {
        let gt = adjoin_top(&ex("C2")).unwrap();
        let p = idempotent_projection(&gt).unwrap();
        assert_eq!(p.map, vec![0, 0, 1]);
        assert!(p.report.is_homomorphism() && p.report.surjective());
        assert!(is_isomorphic_ordered(&p.image, &ex("U+")));
        let l = ex("L<");
        let p = idempotent_projection(&l).unwrap();
        assert_eq!(p.map, vec![0, 1]);
        assert!(matches!(
            idempotent_projection(&ex("FB3")),
            Err(Error::NotNocr { .. })
        ));
        let (_, report) = omega_map(&ex("Rees")).unwrap();
        assert!(!report.multiplicative());
    }

    #[test]
    fn rectangular_examples() {
        let lc2 = ex("L").product(&ex("C2"));
        let cert = rectangular_group_embedding(&lc2).unwrap();
        assert!(cert.validation.is_valid());
        assert_eq!(cert.target_size(), 4);
        let (img, _) = cert.image().unwrap();
        assert!(is_isomorphic_ordered(&img, &lc2));
        let c3 = ex("C3");
        let cert = rectangular_group_embedding(&c3).unwrap();
        assert_eq!(cert.factors[0].semigroup.size(), 1);
        assert_eq!(cert.embedding, vec![0, 1, 2]);
        let lr = ex("L").product(&ex("R"));
        let cert = rectangular_group_embedding(&lr).unwrap();
        assert!(cert.validation.is_valid());
        assert!(cert.coordinates.iter().all(|c| c[1] == 0));
        assert!(matches!(
            rectangular_group_embedding(&ex("U+")),
            Err(Error::HypothesisFailed { .. })
        ));
    }

    #[test]
    fn nocr_embedding_examples() {
        let gt = adjoin_top(&ex("C3")).unwrap();
        let cert = nocr_embedding(&gt, Variant::Top).unwrap();
        assert!(cert.validation.is_valid());
        assert!(cert.validation.reflects_order);
        let sizes: Vec<usize> = cert.factors.iter().map(|f| f.semigroup.size()).collect();
        assert_eq!(sizes, vec![2, 4, 2]);
        let up = ex("U+");
        let cert = nocr_embedding(&up, Variant::Top).unwrap();
        assert_eq!(cert.factors.len(), 3);
        for f in &cert.factors {
            assert!(is_isomorphic_ordered(&f.semigroup, &up));
        }
        assert!(cert.validation.is_valid());
        let c2 = ex("C2");
        let cert = nocr_embedding(&c2, Variant::Zero).unwrap();
        assert!(cert.validation.is_valid());
        assert_eq!(cert.factors[0].semigroup.size(), 1);
        assert_eq!(cert.factors[1].semigroup.size(), 3);
        assert_eq!(
            nocr_embedding(&up, Variant::Zero).unwrap_err(),
            Error::OrderNotEquality
        );
        assert!(matches!(
            nocr_embedding(&up, Variant::Bottom),
            Err(Error::HypothesisFailed { .. })
        ));
        assert!(nocr_embedding(&ex("U-"), Variant::Bottom).unwrap().validation.is_valid());
    }

    #[test]
    fn free_normal_band_counts() {
        let counts: Vec<usize> = (1..=4).map(|k| free_normal_band(k).unwrap().0.size()).collect();
        assert_eq!(counts, vec![1, 6, 24, 80]);
        let (fnb, elems) = free_normal_band(2).unwrap();
        let a = OrderedSemigroup::unordered(fnb);
        assert!(is_member(&a, "NB"));
        let gens: Vec<usize> = (0..2)
            .map(|v| elems.iter().position(|e| *e == NbElement::letter(v)).unwrap())
            .collect();
        assert_eq!(a.sgp().closure_of(&gens).len(), 6);
        assert!(matches!(free_normal_band(9), Err(Error::TooManyLetters { .. })));
        assert!(matches!(free_normal_band(8), Err(Error::TooLarge { size: 4608, .. })));
    }

    #[test]
    fn word_problem_examples() {
        let t = |s| parse_term(s).unwrap();
        assert!(nb_word_problem(&t("x y z x"), &t("x z y x")));
        assert!(!nb_word_problem(&t("x y"), &t("y x")));
        assert!(nb_word_problem(&t("x^w y x"), &t("x y x")));
    }
}
