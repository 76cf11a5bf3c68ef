//! JSON, DOT and CSV formats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::Poset;

/// On-disk form of a poset or lattice: the cover relation and optional
/// labels. Join and meet tables are recomputed on load.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
}

impl PosetJson {
    pub fn from_poset(p: &Poset) -> Self {
        PosetJson {
            n: p.len(),
            covers: p.covers(),
            labels: p.labels().map(<[String]>::to_vec),
            kind: None,
        }
    }

    pub fn from_lattice(l: &Lattice) -> Self {
        PosetJson {
            kind: Some("lattice".into()),
            ..PosetJson::from_poset(l.poset())
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let p = Poset::from_covers(self.n, &self.covers)?;
        match &self.labels {
            Some(labels) if labels.len() != self.n => Err(Error::Format {
                message: format!("{} labels for {} elements", labels.len(), self.n),
            }),
            Some(labels) => Ok(p.with_labels(labels.clone())),
            None => Ok(p),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        Lattice::from_poset(self.to_poset()?)
    }
}

fn parse(text: &str) -> Result<PosetJson> {
    serde_json::from_str(text).map_err(|e| Error::Format {
        message: e.to_string(),
    })
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    parse(text)?.to_poset()
}

/// Reads either format; a poset that happens to be a lattice is accepted.
pub fn lattice_from_json(text: &str) -> Result<Lattice> {
    let doc = parse(text)?;
    match doc.kind.as_deref() {
        None | Some("lattice") | Some("poset") => doc.to_lattice(),
        Some(other) => Err(Error::Format {
            message: format!("unknown kind {other:?}"),
        }),
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string(&PosetJson::from_poset(p)).expect("serialisable")
}

pub fn lattice_to_json(l: &Lattice) -> String {
    serde_json::to_string(&PosetJson::from_lattice(l)).expect("serialisable")
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram with edges drawn from lower to upper element.
pub fn hasse_dot(p: &Poset, name: &str) -> String {
    let mut s = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
    for x in 0..p.len() {
        s.push_str(&format!("  n{x} [label=\"{}\"];\n", escape(&p.label(x))));
    }
    for (lo, hi) in p.covers() {
        s.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    s.push_str("}\n");
    s
}

/// `f_0,f_1,...` as one CSV row, optionally prefixed by a name column.
pub fn f_vector_csv(name: Option<&str>, f: &[usize]) -> String {
    let mut cols: Vec<String> = name.map(|n| vec![n.to_string()]).unwrap_or_default();
    cols.extend(f.iter().map(usize::to_string));
    cols.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::boolean;

    #[test]
    fn round_trip() {
        let b2 = boolean(2).unwrap();
        let text = lattice_to_json(&b2);
        assert!(text.contains("\"kind\":\"lattice\""));
        let back = lattice_from_json(&text).unwrap();
        assert_eq!(back.poset(), b2.poset());
        let plain = poset_from_json(r#"{"n":3,"covers":[[0,1],[1,2]]}"#).unwrap();
        assert!(plain.leq(0, 2));
        assert!(matches!(
            lattice_from_json(r#"{"n":3,"covers":[[0,1],[0,2]]}"#),
            Err(Error::NotALattice { .. })
        ));
        assert!(matches!(poset_from_json("{"), Err(Error::Format { .. })));
    }

    #[test]
    fn dot_and_csv() {
        let dot = hasse_dot(boolean(1).unwrap().poset(), "B1");
        assert!(dot.contains("n0 -> n1;"));
        assert_eq!(f_vector_csv(Some("x"), &[1, 2]), "x,1,2");
    }
}
