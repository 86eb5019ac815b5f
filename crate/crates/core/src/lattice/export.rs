//! JSON and Graphviz renderings of face lattices.

use std::fmt::Write;

use serde_json::{json, Value};

use super::FaceLattice;
use crate::affine::vector_json;
use crate::Scalar;

impl<T: Scalar> FaceLattice<T> {
    /// Faces with active sets, ranks, hulls and (for polytopes) vertices,
    /// plus the covering pairs of the order.
    pub fn to_json(&self) -> Value {
        let faces: Vec<Value> = (0..self.len())
            .map(|i| {
                let f = self.face(i);
                let mut obj = json!({
                    "active": f.active.iter().collect::<Vec<_>>(),
                    "rank": self.rank(i),
                    "hull": f.poly.hull().to_json(),
                });
                if self.is_compact() {
                    obj["vertices"] = self.vertices_of(i).iter().map(vector_json).collect();
                }
                obj
            })
            .collect();
        json!({
            "faces": faces,
            "hasse": self.hasse().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "bottom": self.bottom(),
            "top": self.top(),
        })
    }

    /// Hasse diagram, bottom up, one row per rank. Nodes read
    /// `rank:vertex-count`; faces of rank at most 2 also list their vertices.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph face_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        let max_rank = (0..self.len()).map(|i| self.rank(i)).max().unwrap_or(0);
        for r in 0..=max_rank {
            let members: Vec<usize> = (0..self.len()).filter(|&i| self.rank(i) == r).collect();
            if members.is_empty() {
                continue;
            }
            let _ = writeln!(out, "  {{ rank=same;");
            for i in members {
                let verts = self.vertices_of(i);
                let mut label = format!("{}:{}", r, verts.len());
                if r <= 2 && !verts.is_empty() {
                    let listed: Vec<String> = verts.iter().map(ToString::to_string).collect();
                    label.push_str("\\n");
                    label.push_str(&listed.join(" "));
                }
                let _ = writeln!(out, "    f{i} [label=\"{label}\"];");
            }
            let _ = writeln!(out, "  }}");
        }
        for &(a, b) in self.hasse() {
            let _ = writeln!(out, "  f{a} -> f{b};");
        }
        out.push_str("}\n");
        out
    }
}
