//! The star quiver of a weight triple: one arm per weight, arrows oriented
//! toward the hub, vertices labeled by the twisting degrees.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::collection::build_collection;
use crate::error::Error;
use crate::grading::{Degree, GradingGroup};
use crate::matrix::IntMat;

/// A labeled arrow `source -> target`; the label is the arm index whose
/// coordinate multiplies along the arrow.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

/// Star quiver: a tree with arrows running along each arm into the hub.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub vertices: Vec<Degree>,
    pub arrows: Vec<Arrow>,
}

/// Build the star quiver. Vertex order matches the collection without its
/// unit object: arm twists `x_s, 2 x_s, ...` for each arm, then the hub `c`.
pub fn build_quiver(g: &GradingGroup) -> Quiver {
    let vertices = build_collection(g, false).twists().to_vec();
    let hub = vertices.len() - 1;
    let mut arrows = Vec::new();
    let mut offset = 0usize;
    for s in 0..3 {
        let arm_len = (g.weights().weight(s) - 1) as usize;
        for k in 0..arm_len {
            let source = offset + k;
            let target = if k + 1 < arm_len { source + 1 } else { hub };
            arrows.push(Arrow { source, target, label: s });
        }
        offset += arm_len;
    }
    Quiver { vertices, arrows }
}

/// Number of directed paths from `u` to `v`, counting the empty path when
/// `u = v`. Computed by depth-first recursion over the arrows; on these star
/// quivers every count is 0 or 1.
pub fn path_count(q: &Quiver, u: usize, v: usize) -> Result<BigInt, Error> {
    let n = q.vertices.len();
    for idx in [u, v] {
        if idx >= n {
            return Err(Error::VertexOutOfRange { index: idx, len: n });
        }
    }
    let mut memo: Vec<Option<BigInt>> = vec![None; n];
    Ok(count_paths(q, u, v, &mut memo))
}

fn count_paths(q: &Quiver, u: usize, v: usize, memo: &mut Vec<Option<BigInt>>) -> BigInt {
    if let Some(cached) = &memo[u] {
        return cached.clone();
    }
    let mut total = if u == v { BigInt::one() } else { BigInt::zero() };
    for a in q.arrows.iter().filter(|a| a.source == u) {
        total += count_paths(q, a.target, v, memo);
    }
    memo[u] = Some(total.clone());
    total
}

/// Cartan matrix of the underlying graph: 2 on the diagonal, minus the
/// number of edges joining distinct vertices elsewhere.
pub fn cartan_from_quiver(q: &Quiver) -> IntMat {
    let n = q.vertices.len();
    let mut m = IntMat::zeros(n, n);
    for i in 0..n {
        m.set(i, i, BigInt::from(2));
    }
    for a in &q.arrows {
        let v = m.at(a.source, a.target) - 1;
        m.set(a.source, a.target, v);
        let v = m.at(a.target, a.source) - 1;
        m.set(a.target, a.source, v);
    }
    m
}

/// DOT export. Vertex names are the degree wire strings; arrow labels are
/// the arm coordinates `x0`, `x1`, `x2`.
pub fn to_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph star_quiver {\n");
    for v in &q.vertices {
        out.push_str(&format!("  \"{}\";\n", v.wire()));
    }
    for a in &q.arrows {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"x{}\"];\n",
            q.vertices[a.source].wire(),
            q.vertices[a.target].wire(),
            a.label
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(p0: i64, p1: i64, p2: i64) -> GradingGroup {
        GradingGroup::for_weights(p0, p1, p2).unwrap()
    }

    #[test]
    fn build_quiver_examples() {
        // (2,2,2): four vertices, three arrows into the hub.
        let q = build_quiver(&group(2, 2, 2));
        assert_eq!(q.vertices.len(), 4);
        assert_eq!(q.arrows.len(), 3);
        assert!(q.arrows.iter().all(|a| a.target == 3));

        // (1,2,2): a path x1 -> c <- x2.
        let q = build_quiver(&group(1, 2, 2));
        assert_eq!(q.vertices.len(), 3);
        assert_eq!(
            q.vertices,
            vec![Degree::arm_generator(1), Degree::arm_generator(2), Degree::hub_generator()]
        );
        assert_eq!(
            q.arrows,
            vec![
                Arrow { source: 0, target: 2, label: 1 },
                Arrow { source: 1, target: 2, label: 2 }
            ]
        );

        // (2,3,4): seven vertices, arms of lengths 1, 2, 3.
        let q = build_quiver(&group(2, 3, 4));
        assert_eq!(q.vertices.len(), 7);
        assert_eq!(q.arrows.len(), 6);

        // (1,1,1): a single hub vertex, no arrows.
        let q = build_quiver(&group(1, 1, 1));
        assert_eq!(q.vertices, vec![Degree::hub_generator()]);
        assert!(q.arrows.is_empty());
    }

    #[test]
    fn vertex_order_matches_collection() {
        for (p0, p1, p2) in [(2, 3, 4), (1, 2, 5), (3, 3, 3)] {
            let g = group(p0, p1, p2);
            let q = build_quiver(&g);
            assert_eq!(q.vertices, build_collection(&g, false).twists());
        }
    }

    #[test]
    fn path_count_examples() {
        let g = group(2, 3, 4);
        let q = build_quiver(&g);
        // Empty path.
        assert_eq!(path_count(&q, 0, 0).unwrap(), BigInt::one());
        // x0 rides straight into the hub (vertex order: x0, x1, 2x1, x2, 2x2, 3x2, c).
        assert_eq!(path_count(&q, 0, 6).unwrap(), BigInt::one());
        // Distinct arms of a tree are unreachable.
        assert_eq!(path_count(&q, 0, 1).unwrap(), BigInt::zero());
        // Along the third arm.
        assert_eq!(path_count(&q, 3, 5).unwrap(), BigInt::one());
        assert_eq!(path_count(&q, 5, 3).unwrap(), BigInt::zero());
        assert_eq!(
            path_count(&q, 9, 0),
            Err(Error::VertexOutOfRange { index: 9, len: 7 })
        );
    }

    #[test]
    fn cartan_matrix_examples() {
        let single = Quiver { vertices: vec![Degree::hub_generator()], arrows: vec![] };
        assert_eq!(cartan_from_quiver(&single), IntMat::from_rows(&[vec![2]]));

        // The (2,2,2) star: hub row carries three -1 entries.
        let c = cartan_from_quiver(&build_quiver(&group(2, 2, 2)));
        let expected = IntMat::from_rows(&[
            vec![2, 0, 0, -1],
            vec![0, 2, 0, -1],
            vec![0, 0, 2, -1],
            vec![-1, -1, -1, 2],
        ]);
        assert_eq!(c, expected);

        // The (2,3,5) star in collection vertex order:
        // x0 | x1, 2x1 | x2, 2x2, 3x2, 4x2 | c.
        let c = cartan_from_quiver(&build_quiver(&group(2, 3, 5)));
        let expected = IntMat::from_rows(&[
            vec![2, 0, 0, 0, 0, 0, 0, -1],
            vec![0, 2, -1, 0, 0, 0, 0, 0],
            vec![0, -1, 2, 0, 0, 0, 0, -1],
            vec![0, 0, 0, 2, -1, 0, 0, 0],
            vec![0, 0, 0, -1, 2, -1, 0, 0],
            vec![0, 0, 0, 0, -1, 2, -1, 0],
            vec![0, 0, 0, 0, 0, -1, 2, -1],
            vec![-1, 0, -1, 0, 0, 0, -1, 2],
        ]);
        assert_eq!(c, expected);
    }

    #[test]
    fn underlying_graph_is_a_tree() {
        for (p0, p1, p2) in [(2, 2, 2), (2, 3, 7), (1, 1, 1), (4, 5, 6)] {
            let g = group(p0, p1, p2);
            let q = build_quiver(&g);
            assert_eq!(q.vertices.len() as u64, g.weights().vertex_count());
            assert_eq!(q.arrows.len() + 1, q.vertices.len());
        }
    }

    #[test]
    fn dot_export_golden() {
        let q = build_quiver(&group(1, 2, 2));
        let dot = to_dot(&q);
        let expected = "digraph star_quiver {\n  \"0 1 0 0\";\n  \"0 0 1 0\";\n  \"0 0 0 1\";\n  \"0 1 0 0\" -> \"0 0 0 1\" [label=\"x1\"];\n  \"0 0 1 0\" -> \"0 0 0 1\" [label=\"x2\"];\n}\n";
        assert_eq!(dot, expected);
    }
}
