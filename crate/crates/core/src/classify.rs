//! Classification of the pseudovariety generated by finite ordered
//! semigroups: the sixteen ordered normal band nodes, the coordinates
//! (semilattice part, rectangular band part, group part) of normal
//! orthogroup pseudovarieties, selfduality and order primitivity.

use std::fmt;

use serde::Serialize;

use crate::decompose::{maximal_subgroup, standard_example};
use crate::divide::{divides_with, DivideConfig};
use crate::error::{Error, Result};
use crate::iso::{find_isomorphism, generating_set};
use crate::semigroup::OrderedSemigroup;
use crate::varieties::{holds, is_member, member_with, rel, BAND_NODES};

/// The four generators of the ordered normal band lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EmeryGen {
    UPlus,
    UMinus,
    L,
    R,
}

impl EmeryGen {
    pub const ALL: [EmeryGen; 4] = [EmeryGen::UPlus, EmeryGen::UMinus, EmeryGen::L, EmeryGen::R];

    fn bit(self) -> u8 {
        match self {
            EmeryGen::UPlus => 1,
            EmeryGen::UMinus => 2,
            EmeryGen::L => 4,
            EmeryGen::R => 8,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EmeryGen::UPlus => "U+",
            EmeryGen::UMinus => "U-",
            EmeryGen::L => "L",
            EmeryGen::R => "R",
        }
    }

    pub fn example(self) -> OrderedSemigroup {
        standard_example(self.name()).expect("standard generator")
    }

    /// The relation of the largest node without this generator; the
    /// generator lies in `⟨A⟩` exactly when `A` fails it.
    fn excluding_relation(self) -> &'static str {
        match self {
            EmeryGen::UPlus => "x y x <= x",
            EmeryGen::UMinus => "x <= x y x",
            EmeryGen::L => "x y z = y x z",
            EmeryGen::R => "x y z = x z y",
        }
    }
}

// generator bits of BAND_NODES, in the same order
const NODE_GENS: [u8; 16] = [0, 1, 2, 4, 8, 3, 5, 6, 9, 10, 12, 7, 11, 13, 14, 15];

/// A node of the sixteen element lattice of ordered normal band
/// pseudovarieties, identified by the standard generators it contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EmeryNode {
    bits: u8,
}

impl EmeryNode {
    pub fn from_bits(bits: u8) -> Self {
        assert!(bits < 16);
        EmeryNode { bits }
    }

    pub fn from_gens(gens: &[EmeryGen]) -> Self {
        EmeryNode {
            bits: gens.iter().fold(0, |b, g| b | g.bit()),
        }
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn all() -> Vec<EmeryNode> {
        (0..16).map(EmeryNode::from_bits).collect()
    }

    pub fn contains(self, g: EmeryGen) -> bool {
        self.bits & g.bit() != 0
    }

    pub fn gens(self) -> Vec<EmeryGen> {
        EmeryGen::ALL.into_iter().filter(|&g| self.contains(g)).collect()
    }

    pub fn gen_names(self) -> Vec<&'static str> {
        self.gens().into_iter().map(EmeryGen::name).collect()
    }

    pub fn join(self, other: EmeryNode) -> EmeryNode {
        EmeryNode {
            bits: self.bits | other.bits,
        }
    }

    pub fn meet(self, other: EmeryNode) -> EmeryNode {
        EmeryNode {
            bits: self.bits & other.bits,
        }
    }

    pub fn leq(self, other: EmeryNode) -> bool {
        self.bits & !other.bits == 0
    }

    fn position(self) -> usize {
        NODE_GENS.iter().position(|&b| b == self.bits).unwrap()
    }

    /// `N01` .. `N16`.
    pub fn id(self) -> &'static str {
        BAND_NODES[self.position()].0
    }

    /// The node's defining relation (besides `x x = x`).
    pub fn relation(self) -> &'static str {
        BAND_NODES[self.position()].1
    }

    pub fn label(self) -> String {
        format!("[[{}]]", self.relation())
    }
}

impl fmt::Display for EmeryNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.label())
    }
}

/// The node of `⟨A⟩` for an ordered normal band `A`.
pub fn emery_classify(a: &OrderedSemigroup) -> Result<EmeryNode> {
    let m = member_with(a, "NB", true)?;
    if let Some((r, _)) = m.failure {
        return Err(Error::NotANormalBand {
            relation: r.to_string(),
        });
    }
    let gens: Vec<EmeryGen> = EmeryGen::ALL
        .into_iter()
        .filter(|g| !holds(a, &rel(g.excluding_relation())))
        .collect();
    Ok(EmeryNode::from_gens(&gens))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SlPart {
    Trivial,
    SlPlus,
    SlMinus,
    SlFull,
}

impl SlPart {
    fn bits(self) -> u8 {
        match self {
            SlPart::Trivial => 0,
            SlPart::SlPlus => 1,
            SlPart::SlMinus => 2,
            SlPart::SlFull => 3,
        }
    }

    fn from_bits(b: u8) -> Self {
        match b {
            0 => SlPart::Trivial,
            1 => SlPart::SlPlus,
            2 => SlPart::SlMinus,
            _ => SlPart::SlFull,
        }
    }

    pub const ALL: [SlPart; 4] = [SlPart::Trivial, SlPart::SlPlus, SlPart::SlMinus, SlPart::SlFull];

    pub fn join(self, other: SlPart) -> SlPart {
        SlPart::from_bits(self.bits() | other.bits())
    }

    pub fn meet(self, other: SlPart) -> SlPart {
        SlPart::from_bits(self.bits() & other.bits())
    }

    pub fn leq(self, other: SlPart) -> bool {
        self.bits() & !other.bits() == 0
    }

    pub fn has_u_plus(self) -> bool {
        self.bits() & 1 != 0
    }

    pub fn has_u_minus(self) -> bool {
        self.bits() & 2 != 0
    }

    pub fn dual(self) -> SlPart {
        match self {
            SlPart::SlPlus => SlPart::SlMinus,
            SlPart::SlMinus => SlPart::SlPlus,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SlPart::Trivial => "Trivial",
            SlPart::SlPlus => "SlPlus",
            SlPart::SlMinus => "SlMinus",
            SlPart::SlFull => "SlFull",
        }
    }
}

/// Which of the left and right zero semigroups lie in the pseudovariety.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RbPart {
    pub lz: bool,
    pub rz: bool,
}

impl RbPart {
    pub const ALL: [RbPart; 4] = [
        RbPart { lz: false, rz: false },
        RbPart { lz: true, rz: false },
        RbPart { lz: false, rz: true },
        RbPart { lz: true, rz: true },
    ];

    pub fn join(self, other: RbPart) -> RbPart {
        RbPart {
            lz: self.lz || other.lz,
            rz: self.rz || other.rz,
        }
    }

    pub fn meet(self, other: RbPart) -> RbPart {
        RbPart {
            lz: self.lz && other.lz,
            rz: self.rz && other.rz,
        }
    }

    pub fn leq(self, other: RbPart) -> bool {
        (!self.lz || other.lz) && (!self.rz || other.rz)
    }

    pub fn names(self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.lz {
            v.push("LZ");
        }
        if self.rz {
            v.push("RZ");
        }
        v
    }
}

fn ensure_cr(a: &OrderedSemigroup) -> Result<()> {
    match a.sgp().cr_violation() {
        Some(witness) => Err(Error::NotCompletelyRegular { witness }),
        None => Ok(()),
    }
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

/// Whether `U⁺` and `U⁻` lie in `⟨A⟩`, read off two ω-inequalities.
pub fn sl_component(a: &OrderedSemigroup) -> Result<SlPart> {
    ensure_cr(a)?;
    let p = holds(a, &rel("x^w <= x^w y^w x^w"));
    let q = holds(a, &rel("x^w y^w x^w <= x^w"));
    Ok(match (p, q) {
        (false, false) => SlPart::SlFull,
        (true, true) => SlPart::Trivial,
        (true, false) => SlPart::SlPlus,
        (false, true) => SlPart::SlMinus,
    })
}

pub fn rb_component(a: &OrderedSemigroup) -> Result<RbPart> {
    ensure_nocr(a)?;
    Ok(RbPart {
        lz: !holds(a, &rel("x^w y^w z^w = y^w x^w z^w")),
        rz: !holds(a, &rel("x^w y^w z^w = x^w z^w y^w")),
    })
}

/// A group together with a short name: `Cn`, `C2xC2`, `S3`, or `G<n>`
/// when none of those fits.
#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub name: String,
    pub group: OrderedSemigroup,
}

impl PartialEq for NamedGroup {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group)
    }
}

/// Groups above this order are compared verbatim instead of up to
/// isomorphism.
pub const GROUP_ORDER_BOUND: usize = 64;

fn same_group(a: &OrderedSemigroup, b: &OrderedSemigroup) -> bool {
    if a.size() != b.size() {
        return false;
    }
    if a.size() > GROUP_ORDER_BOUND {
        return a.sgp() == b.sgp();
    }
    find_isomorphism(a.sgp(), b.sgp()).is_some()
}

pub fn name_group(g: &OrderedSemigroup) -> String {
    let n = g.size();
    if n == 1 {
        return "trivial".into();
    }
    if generating_set(g.sgp()).len() == 1 {
        return format!("C{n}");
    }
    for name in ["C2xC2", "S3"] {
        let known = standard_example(name).expect("standard group");
        if same_group(g, &known) {
            return name.into();
        }
    }
    format!("G{n}")
}

impl NamedGroup {
    pub fn new(group: OrderedSemigroup) -> Self {
        let name = name_group(&group);
        let group = group.forget_order().with_name(name.clone());
        NamedGroup { name, group }
    }
}

/// Appends groups not already present up to isomorphism; trivial groups
/// are dropped.
fn merge_groups(into: &mut Vec<NamedGroup>, more: impl IntoIterator<Item = NamedGroup>) {
    for g in more {
        if g.group.size() > 1 && !into.contains(&g) {
            into.push(g);
        }
    }
}

/// The non-trivial maximal subgroups, one per isomorphism type.
pub fn group_component(a: &OrderedSemigroup) -> Result<Vec<NamedGroup>> {
    ensure_cr(a)?;
    let mut out = Vec::new();
    for e in a.sgp().idempotents() {
        let (h, _) = maximal_subgroup(a, e);
        merge_groups(&mut out, [NamedGroup::new(h)]);
    }
    Ok(out)
}

/// Coordinates of a normal orthogroup pseudovariety.
#[derive(Debug, Clone)]
pub struct NocrTriple {
    pub sl: SlPart,
    pub rb: RbPart,
    pub groups: Vec<NamedGroup>,
}

impl PartialEq for NocrTriple {
    /// Group lists compare as sets up to isomorphism.
    fn eq(&self, other: &Self) -> bool {
        self.sl == other.sl
            && self.rb == other.rb
            && self.groups.iter().all(|g| other.groups.contains(g))
            && other.groups.iter().all(|g| self.groups.contains(g))
    }
}

impl NocrTriple {
    pub fn trivial() -> Self {
        NocrTriple {
            sl: SlPart::Trivial,
            rb: RbPart::default(),
            groups: Vec::new(),
        }
    }

    pub fn group_names(&self) -> Vec<String> {
        self.groups.iter().map(|g| g.name.clone()).collect()
    }
}

/// `ι` of the pseudovariety generated by `gens`: componentwise joins.
pub fn iota(gens: &[OrderedSemigroup]) -> Result<NocrTriple> {
    let mut t = NocrTriple::trivial();
    for (index, a) in gens.iter().enumerate() {
        if !is_member(a, "NOCR") {
            return Err(Error::GeneratorNotNocr { index });
        }
        t.sl = t.sl.join(sl_component(a)?);
        t.rb = t.rb.join(rb_component(a)?);
        merge_groups(&mut t.groups, group_component(a)?);
    }
    Ok(t)
}

pub fn triple_join(a: &NocrTriple, b: &NocrTriple) -> NocrTriple {
    let mut groups = a.groups.clone();
    merge_groups(&mut groups, b.groups.iter().cloned());
    NocrTriple {
        sl: a.sl.join(b.sl),
        rb: a.rb.join(b.rb),
        groups,
    }
}

fn group_product(groups: &[NamedGroup]) -> OrderedSemigroup {
    groups
        .iter()
        .map(|g| g.group.clone())
        .reduce(|acc, g| acc.product(&g))
        .unwrap_or_else(OrderedSemigroup::trivial)
}

/// Subgroups of `g` generated by at most two elements.
fn small_subgroups(g: &OrderedSemigroup) -> Vec<OrderedSemigroup> {
    let mut out: Vec<OrderedSemigroup> = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.size() {
        for b in a..g.size() {
            let elems = g.sgp().closure_of(&[a, b]);
            if !seen.contains(&elems) {
                out.push(g.induced(&elems));
                seen.push(elems);
            }
        }
    }
    out
}

/// Componentwise meet. The group part keeps the subgroups of members of
/// either list that divide a power (up to `power_bound`) of the product of
/// each side, so it depends on the bound.
pub fn triple_meet(a: &NocrTriple, b: &NocrTriple, power_bound: usize) -> NocrTriple {
    let pa = group_product(&a.groups);
    let pb = group_product(&b.groups);
    let config = DivideConfig::new(power_bound);
    let mut candidates = Vec::new();
    for g in a.groups.iter().chain(&b.groups) {
        merge_groups(&mut candidates, small_subgroups(&g.group).into_iter().map(NamedGroup::new));
    }
    let divides_both = |h: &OrderedSemigroup| {
        [&pa, &pb]
            .iter()
            .all(|p| matches!(divides_with(h, p, &config), Ok(Some(_))))
    };
    let groups = candidates.into_iter().filter(|h| divides_both(&h.group)).collect();
    NocrTriple {
        sl: a.sl.meet(b.sl),
        rb: a.rb.meet(b.rb),
        groups,
    }
}

fn sl_join(gens: &[OrderedSemigroup]) -> Result<SlPart> {
    let mut sl = SlPart::Trivial;
    for (index, a) in gens.iter().enumerate() {
        if !a.sgp().is_completely_regular() {
            return Err(Error::GeneratorNotCr { index });
        }
        sl = sl.join(sl_component(a)?);
    }
    Ok(sl)
}

/// Selfdual exactly when both or neither of `U⁺` and `U⁻` are generated.
pub fn is_selfdual(gens: &[OrderedSemigroup]) -> Result<bool> {
    let sl = sl_join(gens)?;
    Ok(sl.has_u_plus() == sl.has_u_minus())
}

/// The generators of the join with the dual pseudovariety: the missing one
/// of `U⁺` and `U⁻` is appended.
pub fn selfdual_closure(gens: &[OrderedSemigroup]) -> Result<Vec<OrderedSemigroup>> {
    let sl = sl_join(gens)?;
    let mut out = gens.to_vec();
    match sl {
        SlPart::SlPlus => out.push(EmeryGen::UMinus.example()),
        SlPart::SlMinus => out.push(EmeryGen::UPlus.example()),
        _ => {}
    }
    Ok(out)
}

/// For equality-ordered completely regular generators: not order primitive
/// exactly when every generator is a normal orthogroup and the semilattices
/// are generated.
pub fn is_order_primitive(gens: &[OrderedSemigroup]) -> Result<bool> {
    let sl = sl_join(gens)?;
    if gens.iter().any(|a| !a.has_equality_order()) {
        return Err(Error::OrderNotEquality);
    }
    let all_nocr = gens.iter().all(|a| is_member(a, "NOCR"));
    Ok(!(all_nocr && sl == SlPart::SlFull))
}

/// Node of the ordered normal bands in `⟨gens⟩`, by the divisor oracle.
/// Returns the node and, per generator, whether the search was cut short.
pub fn emery_by_oracle(gens: &[OrderedSemigroup], config: &DivideConfig) -> (EmeryNode, Vec<String>) {
    let mut found = Vec::new();
    let mut notes = Vec::new();
    for g in EmeryGen::ALL {
        let t = g.example();
        let mut hit = false;
        for a in gens {
            match divides_with(&t, a, config) {
                Ok(Some(_)) => {
                    hit = true;
                    break;
                }
                Ok(None) => {}
                Err(e) => notes.push(format!("{}: {e}", g.name())),
            }
        }
        if hit {
            found.push(g);
        } else {
            notes.push(format!(
                "{} not found as a divisor of a generator power up to {}",
                g.name(),
                config.power_bound
            ));
        }
    }
    (EmeryNode::from_gens(&found), notes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmeryReport {
    pub gens: Vec<String>,
    pub node: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub sl: String,
    pub rb: Vec<String>,
    pub groups: Vec<String>,
}

impl From<&NocrTriple> for TripleReport {
    fn from(t: &NocrTriple) -> Self {
        TripleReport {
            sl: t.sl.name().into(),
            rb: t.rb.names().into_iter().map(String::from).collect(),
            groups: t.group_names(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub emery: EmeryReport,
    pub nocr_triple: Option<TripleReport>,
    pub selfdual: bool,
    pub order_primitive: Option<bool>,
    pub notes: Vec<String>,
}

/// Full classification of `⟨gens⟩` for completely regular generators.
/// `power_bound` limits the divisor searches used when some generator is
/// not a normal orthogroup.
pub fn classify(gens: &[OrderedSemigroup], power_bound: usize) -> Result<ClassificationReport> {
    if gens.is_empty() {
        return Err(Error::EmptySeed);
    }
    for (index, a) in gens.iter().enumerate() {
        if !a.sgp().is_completely_regular() {
            return Err(Error::GeneratorNotCr { index });
        }
    }
    let mut notes = Vec::new();
    let all_nocr = gens.iter().all(|a| is_member(a, "NOCR"));
    let (node, triple) = if all_nocr {
        let t = iota(gens)?;
        let mut found = Vec::new();
        if t.sl.has_u_plus() {
            found.push(EmeryGen::UPlus);
        }
        if t.sl.has_u_minus() {
            found.push(EmeryGen::UMinus);
        }
        if t.rb.lz {
            found.push(EmeryGen::L);
        }
        if t.rb.rz {
            found.push(EmeryGen::R);
        }
        let node = EmeryNode::from_gens(&found);
        if gens.iter().all(|a| a.sgp().is_band()) {
            let direct = gens
                .iter()
                .map(emery_classify)
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .fold(EmeryNode::from_bits(0), EmeryNode::join);
            debug_assert_eq!(direct, node);
        }
        (node, Some(t))
    } else {
        notes.push("some generator is not a normal orthogroup; no coordinates are defined".into());
        let (node, oracle_notes) = emery_by_oracle(gens, &DivideConfig::new(power_bound));
        notes.extend(oracle_notes);
        (node, None)
    };
    if let Some(t) = &triple {
        if t.groups.iter().any(|g| g.group.size() > GROUP_ORDER_BOUND) {
            notes.push(format!(
                "groups above order {GROUP_ORDER_BOUND} are kept without isomorphism reduction"
            ));
        }
    }
    let selfdual = is_selfdual(gens)?;
    let order_primitive = if gens.iter().all(|a| a.has_equality_order()) {
        let p = is_order_primitive(gens)?;
        if !all_nocr && sl_join(gens)? == SlPart::SlFull {
            notes.push(
                "order primitivity was decided by the orthogroup criterion; for these generators it is not certified"
                    .into(),
            );
        }
        Some(p)
    } else {
        notes.push("order primitivity is only decided for equality orders".into());
        None
    };
    Ok(ClassificationReport {
        emery: EmeryReport {
            gens: node.gen_names().into_iter().map(String::from).collect(),
            node: node.label(),
        },
        nocr_triple: triple.as_ref().map(TripleReport::from),
        selfdual,
        order_primitive,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{adjoin_top, free_band};

    fn ex(name: &str) -> OrderedSemigroup {
        standard_example(name).unwrap()
    }

    #[test]
    fn nodes_match_relations() {
        let all = EmeryNode::all();
        assert_eq!(all.len(), 16);
        let ids: std::collections::BTreeSet<_> = all.iter().map(|n| n.id()).collect();
        assert_eq!(ids.len(), 16);
        assert_eq!(EmeryNode::from_gens(&[EmeryGen::UPlus]).label(), "[[x <= y x y]]");
        assert_eq!(EmeryNode::from_bits(15).id(), "N16");
    }

    #[test]
    fn emery_examples() {
        assert_eq!(emery_classify(&ex("U+")).unwrap().gens(), vec![EmeryGen::UPlus]);
        assert_eq!(emery_classify(&ex("L<")).unwrap().gens(), vec![EmeryGen::L]);
        let uu = ex("U+").product(&ex("U-"));
        let node = emery_classify(&uu).unwrap();
        assert_eq!(node.gens(), vec![EmeryGen::UPlus, EmeryGen::UMinus]);
        assert_eq!(node.relation(), "x y = y x");
        assert!(matches!(
            emery_classify(&ex("C2")),
            Err(Error::NotANormalBand { .. })
        ));
    }

    #[test]
    fn sl_examples() {
        assert_eq!(sl_component(&ex("Gtop:2")).unwrap(), SlPart::SlPlus);
        assert_eq!(sl_component(&ex("S3")).unwrap(), SlPart::Trivial);
        assert_eq!(
            sl_component(&ex("U+").product(&ex("U-"))).unwrap(),
            SlPart::SlFull
        );
        let null = crate::semigroup::FiniteSemigroup::new(vec![vec![1, 1], vec![1, 1]], None).unwrap();
        assert_eq!(
            sl_component(&OrderedSemigroup::unordered(null)).unwrap_err(),
            Error::NotCompletelyRegular { witness: 0 }
        );
    }

    #[test]
    fn rb_and_group_examples() {
        let lc2 = ex("L").product(&ex("C2"));
        assert_eq!(rb_component(&lc2).unwrap(), RbPart { lz: true, rz: false });
        let groups = group_component(&ex("Gtop:3")).unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].name, "C3");
        assert!(group_component(&ex("L<")).unwrap().is_empty());
        assert_eq!(group_component(&ex("S3")).unwrap()[0].name, "S3");
        assert_eq!(group_component(&ex("C2xC2")).unwrap()[0].name, "C2xC2");
        assert_eq!(group_component(&ex("C2").product(&ex("C3"))).unwrap()[0].name, "C6");
    }

    #[test]
    fn iota_examples() {
        let t = iota(&[ex("U+"), ex("L"), ex("C2")]).unwrap();
        assert_eq!(t.sl, SlPart::SlPlus);
        assert_eq!(t.rb, RbPart { lz: true, rz: false });
        assert_eq!(t.group_names(), vec!["C2"]);
        assert_eq!(iota(&[ex("trivial")]).unwrap(), NocrTriple::trivial());
        let t = iota(&[ex("Gtop:2")]).unwrap();
        assert_eq!((t.sl, t.group_names()), (SlPart::SlPlus, vec!["C2".to_string()]));
        assert_eq!(
            iota(&[ex("C2"), free_band(3)]).unwrap_err(),
            Error::GeneratorNotNocr { index: 1 }
        );
    }

    #[test]
    fn selfduality() {
        assert!(!is_selfdual(&[ex("U+")]).unwrap());
        assert!(is_selfdual(&[ex("U+"), ex("U-")]).unwrap());
        assert!(is_selfdual(&[ex("C2")]).unwrap());
        let gt = ex("Gtop:2");
        let closed = selfdual_closure(std::slice::from_ref(&gt)).unwrap();
        assert_eq!(closed, vec![gt, ex("U-")]);
        assert!(is_selfdual(&closed).unwrap());
        let both = vec![ex("U+"), ex("U-")];
        assert_eq!(selfdual_closure(&both).unwrap(), both);
        assert_eq!(selfdual_closure(&[ex("C2")]).unwrap(), vec![ex("C2")]);
    }

    #[test]
    fn order_primitivity() {
        let sl2 = ex("U+").forget_order();
        assert!(!is_order_primitive(&[sl2]).unwrap());
        assert!(is_order_primitive(&[free_band(3)]).unwrap());
        assert!(is_order_primitive(&[ex("C2")]).unwrap());
        // the two-letter free band is a normal band
        assert!(!is_order_primitive(&[free_band(2)]).unwrap());
        assert_eq!(
            is_order_primitive(&[ex("U+")]).unwrap_err(),
            Error::OrderNotEquality
        );
    }

    #[test]
    fn triple_lattice_examples() {
        let t = |sl, lz, rz, gs: &[&str]| NocrTriple {
            sl,
            rb: RbPart { lz, rz },
            groups: gs.iter().map(|g| NamedGroup::new(ex(g))).collect(),
        };
        let j = triple_join(&t(SlPart::SlPlus, false, false, &[]), &t(SlPart::SlMinus, false, false, &[]));
        assert_eq!(j, t(SlPart::SlFull, false, false, &[]));
        let m = triple_meet(
            &t(SlPart::SlFull, true, false, &["C2"]),
            &t(SlPart::SlFull, false, true, &["C2"]),
            2,
        );
        assert_eq!(m, t(SlPart::SlFull, false, false, &["C2"]));
        let j = triple_join(&t(SlPart::Trivial, false, false, &["C2"]), &t(SlPart::Trivial, false, false, &["C3"]));
        assert_eq!(j.group_names(), vec!["C2", "C3"]);
        let m = triple_meet(
            &t(SlPart::Trivial, false, false, &["C2"]),
            &t(SlPart::Trivial, false, false, &["C3"]),
            2,
        );
        assert!(m.groups.is_empty());
    }

    #[test]
    fn classification_reports() {
        let r = classify(&[adjoin_top(&ex("C3")).unwrap()], 2).unwrap();
        let t = r.nocr_triple.as_ref().unwrap();
        assert_eq!(t.sl, "SlPlus");
        assert_eq!(t.groups, vec!["C3"]);
        assert_eq!(r.emery.gens, vec!["U+"]);
        assert!(!r.selfdual);
        assert_eq!(r.order_primitive, None);
        let r = classify(&[free_band(3)], 1).unwrap();
        assert!(r.nocr_triple.is_none());
        assert_eq!(r.emery.gens, vec!["U+", "U-", "L", "R"]);
        assert_eq!(r.order_primitive, Some(true));
        let json = serde_json::to_string(&classify(&[ex("L")], 1).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"emery":{"gens":["L"],"node":"[[x y = x]]"},"nocr_triple":{"sl":"Trivial","rb":["LZ"],"groups":[]},"selfdual":true,"order_primitive":true,"notes":[]}"#
        );
    }
}
