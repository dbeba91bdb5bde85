use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::laurent::{ExponentVector, LaurentPoly};

use super::{ComponentSet, LinkDescriptor, LinkError};

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Text(String),
}

#[derive(Debug, Serialize, Deserialize)]
struct ComponentFile {
    name: String,
    #[serde(default)]
    genus: i64,
}

#[derive(Debug, Serialize, Deserialize)]
struct LinkFile {
    name: String,
    components: Vec<ComponentFile>,
    linking_matrix: Vec<Vec<i64>>,
    alexander: BTreeMap<String, Vec<(Vec<i64>, Coefficient)>>,
}

/// Parses and validates a link file.
pub fn link_from_json(text: &str) -> Result<LinkDescriptor, LinkError> {
    let file: LinkFile = serde_json::from_str(text).map_err(|e| LinkError::Parse(e.to_string()))?;
    let n = file.components.len();
    let mut alexander = BTreeMap::new();
    for (key, terms) in &file.alexander {
        let set = ComponentSet::parse_one_based(key, n)?;
        let mut poly_terms = Vec::with_capacity(terms.len());
        for (exp, coeff) in terms {
            if exp.len() != set.len() {
                return Err(LinkError::Invalid {
                    field: format!("alexander[{}]", key),
                    witness: format!("exponent {:?} has {} entries, expected {}", exp, exp.len(), set.len()),
                });
            }
            let c = match coeff {
                Coefficient::Int(v) => BigInt::from(*v),
                Coefficient::Text(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| LinkError::Parse(format!("bad coefficient {:?} in alexander[{}]", s, key)))?,
            };
            poly_terms.push((ExponentVector::from_doubled(exp.clone()), c));
        }
        if alexander.insert(set, LaurentPoly::from_terms(set.len(), poly_terms)).is_some() {
            return Err(LinkError::Parse(format!("duplicate alexander key for sublink {}", set)));
        }
    }
    LinkDescriptor::new(
        file.name,
        file.components.iter().map(|c| c.name.clone()).collect(),
        file.linking_matrix,
        file.components.iter().map(|c| c.genus).collect(),
        alexander,
    )
}

pub fn load_link(path: impl AsRef<Path>) -> Result<LinkDescriptor, LinkError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| LinkError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    link_from_json(&text)
}

/// Serializes a descriptor, writing every stored sublink polynomial.
pub fn link_to_json(link: &LinkDescriptor) -> String {
    let alexander = link
        .alexander_map()
        .iter()
        .map(|(set, p)| {
            let terms = p
                .terms()
                .rev()
                .map(|(e, c)| {
                    let coeff = match i64::try_from(c) {
                        Ok(v) => Coefficient::Int(v),
                        Err(_) => Coefficient::Text(c.to_string()),
                    };
                    (e.doubled().to_vec(), coeff)
                })
                .collect();
            (set.to_string(), terms)
        })
        .collect();
    let file = LinkFile {
        name: link.name().to_string(),
        components: link
            .component_names()
            .iter()
            .zip(link.genus())
            .map(|(name, &genus)| ComponentFile {
                name: name.clone(),
                genus,
            })
            .collect(),
        linking_matrix: link.linking().to_vec(),
        alexander,
    };
    serde_json::to_string_pretty(&file).expect("link serialization cannot fail")
}
