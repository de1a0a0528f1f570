//! JSON file formats: semigroup files and decomposition certificates.

use serde::{Deserialize, Serialize};

use crate::decompose::{DecompositionCertificate, FactorKind, TARGET_LIMIT};
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, OrderedSemigroup};

/// The on-disk form of an ordered semigroup. `order` lists generating pairs
/// `[lo, hi]`; when absent the order is equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<[usize; 2]>>,
}

impl SemigroupFile {
    /// Order pairs are the covering pairs, so the file is the same for
    /// every generating set of the same order.
    pub fn from_ordered(a: &OrderedSemigroup) -> Self {
        let order = if a.has_equality_order() {
            None
        } else {
            Some(a.order().covering_pairs().into_iter().map(|(l, h)| [l, h]).collect())
        };
        SemigroupFile {
            name: a.name().to_string(),
            elements: a.sgp().labels().to_vec(),
            table: a.sgp().rows(),
            order,
        }
    }

    pub fn to_ordered(&self) -> Result<OrderedSemigroup> {
        let sgp = FiniteSemigroup::new(self.table.clone(), Some(self.elements.clone()))?;
        let pairs: Vec<(usize, usize)> = self
            .order
            .iter()
            .flatten()
            .map(|&[lo, hi]| (lo, hi))
            .collect();
        Ok(OrderedSemigroup::new(sgp, &pairs)?.with_name(self.name.clone()))
    }
}

fn format_error(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

pub fn parse_semigroup(text: &str) -> Result<OrderedSemigroup> {
    let file: SemigroupFile = serde_json::from_str(text).map_err(format_error)?;
    file.to_ordered()
}

/// Single-line form with keys in file order; byte-identical for equal
/// inputs.
pub fn to_canonical_json(a: &OrderedSemigroup) -> String {
    serde_json::to_string(&SemigroupFile::from_ordered(a)).expect("serializable")
}

/// Multi-line form with one table row per line.
pub fn to_pretty_json(a: &OrderedSemigroup) -> String {
    let f = SemigroupFile::from_ordered(a);
    let rows: Vec<String> = f.table.iter().map(|r| format!("    {}", j(r))).collect();
    let mut out = format!(
        "{{\n  \"name\": {},\n  \"elements\": {},\n  \"table\": [\n{}\n  ]",
        j(&f.name),
        j(&f.elements),
        rows.join(",\n")
    );
    if let Some(order) = &f.order {
        out.push_str(&format!(",\n  \"order\": {}", j(order)));
    }
    out.push_str("\n}");
    out
}

fn j<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorDescriptor {
    #[serde(flatten)]
    pub kind: FactorKind,
    pub semigroup: SemigroupFile,
}

/// Certificate as written out. `target` is null when the product has more
/// than [`TARGET_LIMIT`] elements.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateFile {
    pub source: SemigroupFile,
    pub target: Option<SemigroupFile>,
    pub embedding: Vec<usize>,
    pub factors: Vec<FactorDescriptor>,
}

impl CertificateFile {
    pub fn from_certificate(cert: &DecompositionCertificate) -> Self {
        CertificateFile {
            source: SemigroupFile::from_ordered(&cert.source),
            target: cert.target().as_ref().map(SemigroupFile::from_ordered),
            embedding: cert.embedding.clone(),
            factors: cert
                .factors
                .iter()
                .map(|f| FactorDescriptor {
                    kind: f.kind.clone(),
                    semigroup: SemigroupFile::from_ordered(&f.semigroup),
                })
                .collect(),
        }
    }
}

pub fn certificate_json(cert: &DecompositionCertificate) -> String {
    debug_assert!(cert.target_size() <= TARGET_LIMIT || cert.target().is_none());
    let c = CertificateFile::from_certificate(cert);
    let factors: Vec<String> = c.factors.iter().map(|f| format!("    {}", j(f))).collect();
    format!(
        "{{\n  \"source\": {},\n  \"target\": {},\n  \"embedding\": {},\n  \"factors\": [\n{}\n  ]\n}}",
        j(&c.source),
        j(&c.target),
        j(&c.embedding),
        factors.join(",\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{adjoin_top, cyclic_group, nocr_embedding, standard_example, Variant};

    #[test]
    fn u_plus_is_bit_exact() {
        let u = standard_example("U+").unwrap();
        assert_eq!(
            to_canonical_json(&u),
            r#"{"name":"U+","elements":["1","top"],"table":[[0,1],[1,1]],"order":[[0,1]]}"#
        );
        assert_eq!(parse_semigroup(&to_canonical_json(&u)).unwrap(), u);
    }

    #[test]
    fn equality_order_is_omitted() {
        let c = cyclic_group(2);
        let text = to_canonical_json(&c);
        assert!(!text.contains("order"));
        let back = parse_semigroup(&text).unwrap();
        assert!(back.has_equality_order());
        assert_eq!(back.name(), "C2");
    }

    #[test]
    fn pretty_form_parses_back() {
        let g = adjoin_top(&cyclic_group(3)).unwrap();
        let text = to_pretty_json(&g);
        assert!(text.contains("\n    [0,1,2,3],\n"));
        assert_eq!(parse_semigroup(&text).unwrap(), g);
        let c = cyclic_group(2);
        assert_eq!(parse_semigroup(&to_pretty_json(&c)).unwrap(), c);
    }

    #[test]
    fn rejections() {
        let bad = r#"{"name":"x","elements":["a","b"],"table":[[0,1],[1,0]],"order":[[0,1]]}"#;
        assert!(matches!(parse_semigroup(bad), Err(Error::NotStable { .. })));
        let bad = r#"{"name":"x","elements":["a"],"table":[[0.5]]}"#;
        assert!(matches!(parse_semigroup(bad), Err(Error::Format(_))));
        let bad = r#"{"name":"x","elements":["a"],"table":[[0]],"extra":1}"#;
        assert!(matches!(parse_semigroup(bad), Err(Error::Format(_))));
        let bad = r#"{"name":"x","elements":["a","b"],"table":[[0]]}"#;
        assert!(matches!(parse_semigroup(bad), Err(Error::LengthMismatch { .. })));
        let bad = r#"{"name":"x","elements":["a","b"],"table":[[0,1],[1,0]],"order":[[0,1],[1,0]]}"#;
        assert!(matches!(parse_semigroup(bad), Err(Error::NotAntisymmetric { .. })));
    }

    #[test]
    fn certificate_shape() {
        let g = adjoin_top(&cyclic_group(3)).unwrap();
        let cert = nocr_embedding(&g, Variant::Top).unwrap();
        let text = certificate_json(&cert);
        let at = |k: &str| text.find(&format!("\n  \"{k}\"")).unwrap();
        assert!(at("source") < at("target") && at("target") < at("embedding") && at("embedding") < at("factors"));
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["factors"][0]["kind"], "idempotents");
        assert_eq!(v["factors"][1]["kind"], "adjoined_group");
        assert_eq!(v["embedding"].as_array().unwrap().len(), 4);
    }
}
