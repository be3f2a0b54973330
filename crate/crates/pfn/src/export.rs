//! Stable serializations of the Hasse diagram and census output.
//!
//! Both the DOT and the JSON form list elements in the crate's canonical
//! (lexicographic) order and edges in (child index, parent index) order, so
//! repeated runs produce byte-identical output — diffs of exported diagrams
//! are meaningful.

use crate::labeling::ElLabeling;
use crate::poset::Poset;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Graphviz DOT rendering of the Hasse diagram, drawn bottom-up
/// (`rankdir=BT`, minimum at the bottom).  With a labeling, each edge
/// carries its label as `label="(a,b)"` and the move class as
/// `movetype=c|rs|rr`.
pub fn hasse_dot(poset: &Poset, labeling: Option<&ElLabeling>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph pf{} {{", poset.n());
    let _ = writeln!(out, "  rankdir=BT;");
    for (i, x) in poset.elements().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{x}\"];");
    }
    for (child, parent) in poset.cover_edges() {
        match labeling.and_then(|l| l.get(child, parent)) {
            Some((label, movetype)) => {
                let _ = writeln!(
                    out,
                    "  n{child} -> n{parent} [label=\"{label}\", movetype={movetype}];"
                );
            }
            None => {
                let _ = writeln!(out, "  n{child} -> n{parent};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// One cover edge, by element index into [`HasseJson::elements`].
#[derive(Clone, Debug, Serialize)]
pub struct CoverEdgeJson {
    pub child: usize,
    pub parent: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub movetype: Option<String>,
}

/// JSON form of the Hasse diagram.
#[derive(Clone, Debug, Serialize)]
pub struct HasseJson {
    pub n: usize,
    /// One-line words in canonical order; edge endpoints index this list.
    pub elements: Vec<String>,
    pub covers: Vec<CoverEdgeJson>,
}

/// Assembles the JSON form, with labels when a labeling is supplied.
pub fn hasse_json(poset: &Poset, labeling: Option<&ElLabeling>) -> HasseJson {
    HasseJson {
        n: poset.n(),
        elements: poset.elements().iter().map(|x| x.to_string()).collect(),
        covers: poset
            .cover_edges()
            .map(|(child, parent)| {
                let found = labeling.and_then(|l| l.get(child, parent));
                CoverEdgeJson {
                    child,
                    parent,
                    label: found.map(|(label, _)| label.to_string()),
                    movetype: found.map(|(_, movetype)| movetype.to_string()),
                }
            })
            .collect(),
    }
}

/// JSON form of a finite-field rank census.
#[derive(Clone, Debug, Serialize)]
pub struct CensusJson {
    pub n: usize,
    pub q: u64,
    pub counts: BTreeMap<usize, u64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    // === DOT output ===

    #[test]
    fn dot_for_the_two_chain() {
        let poset = Poset::build(2).unwrap();
        let expected = "digraph pf2 {\n\
                        \x20 rankdir=BT;\n\
                        \x20 n0 [label=\"0,0\"];\n\
                        \x20 n1 [label=\"2,1\"];\n\
                        \x20 n1 -> n0;\n\
                        }\n";
        assert_eq!(hasse_dot(&poset, None), expected);
    }

    #[test]
    fn dot_labels_every_edge_when_asked() {
        let poset = Poset::build(4).unwrap();
        let labeling = ElLabeling::new(&poset).unwrap();
        let dot = hasse_dot(&poset, Some(&labeling));
        assert_eq!(dot.matches("movetype=").count(), labeling.len());
        assert!(dot.contains("rankdir=BT"));
        // deterministic: a second render is byte-identical
        assert_eq!(dot, hasse_dot(&poset, Some(&labeling)));
    }

    // === JSON output ===

    #[test]
    fn json_shape_and_indices() {
        let poset = Poset::build(3).unwrap();
        let json = hasse_json(&poset, None);
        assert_eq!(json.n, 3);
        assert_eq!(json.elements, ["0,0,0", "0,3,2", "2,1,0", "3,0,1"]);
        for edge in &json.covers {
            assert!(edge.child < json.elements.len());
            assert!(edge.parent < json.elements.len());
            assert!(edge.label.is_none());
        }
        let text = serde_json::to_string(&json).unwrap();
        assert!(!text.contains("label"), "unlabeled export must omit label keys");
    }

    #[test]
    fn json_carries_labels() {
        let poset = Poset::build(4).unwrap();
        let labeling = ElLabeling::new(&poset).unwrap();
        let json = hasse_json(&poset, Some(&labeling));
        assert_eq!(json.covers.len(), 13);
        assert!(json
            .covers
            .iter()
            .all(|e| e.label.is_some() && e.movetype.is_some()));
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.contains("\"movetype\":\"c\""), "{text}");
    }

    #[test]
    fn census_json_uses_string_keys() {
        let counts = crate::census::skew_rank_census(3, 2).unwrap();
        let json = CensusJson { n: 3, q: 2, counts };
        let text = serde_json::to_string(&json).unwrap();
        assert_eq!(text, r#"{"n":3,"q":2,"counts":{"0":1,"2":7}}"#);
    }
}
