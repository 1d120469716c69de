//! Genus bookkeeping for curves linked on the 3-fold.
//!
//! C is linked to C'' by the complete intersection Y = X cap F cap G with
//! deg F = m + 1 and deg G = w + 1, and
//!
//! ```text
//! p_a(C'') = p_a(C) - p_a(Y) + (m + w - 1) deg C'' + deg(R cap C'') + 1.
//! ```
//!
//! The relation holds on S(1,1,1) and S(0,1,2) only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scroll::ScrollType;

fn require_relation_scroll(scroll: ScrollType) -> Result<()> {
    match scroll {
        ScrollType::S003 => Err(Error::UnsupportedScroll {
            op: "the linkage genus relation",
            scroll,
        }),
        _ => Ok(()),
    }
}

/// `p_a(C'')` from `p_a(C)`.
pub fn genus_relation(
    scroll: ScrollType,
    pa_c: i64,
    pa_y: i64,
    deg_cpp: i64,
    r_int: i64,
    m: i64,
    w: i64,
) -> Result<i64> {
    require_relation_scroll(scroll)?;
    Ok(pa_c - pa_y + (m + w - 1) * deg_cpp + r_int + 1)
}

/// `p_a(C)` from `p_a(C'')`.
pub fn genus_of_linked_curve(
    scroll: ScrollType,
    pa_cpp: i64,
    pa_y: i64,
    deg_cpp: i64,
    r_int: i64,
    m: i64,
    w: i64,
) -> Result<i64> {
    require_relation_scroll(scroll)?;
    Ok(pa_cpp + pa_y - (m + w - 1) * deg_cpp - r_int - 1)
}

/// `p_a(Y)` from `p_a(C)` and `p_a(C'')`.
pub fn genus_of_complete_intersection(
    scroll: ScrollType,
    pa_c: i64,
    pa_cpp: i64,
    deg_cpp: i64,
    r_int: i64,
    m: i64,
    w: i64,
) -> Result<i64> {
    require_relation_scroll(scroll)?;
    Ok(pa_c - pa_cpp + (m + w - 1) * deg_cpp + r_int + 1)
}

/// Genus of a smooth plane curve, `(deg - 1)(deg - 2)/2`.
pub fn plane_curve_genus(deg: i64) -> Result<i64> {
    if deg < 1 {
        return Err(Error::InvalidArgument(format!(
            "plane curve degree must be positive, got {deg}"
        )));
    }
    Ok((deg - 1) * (deg - 2) / 2)
}

/// Genus of a curve of type `(a, b)` on a smooth quadric surface.
pub fn quadric_type_genus(a: i64, b: i64) -> Result<i64> {
    if a < 0 || b < 0 || (a == 0 && b == 0) {
        return Err(Error::InvalidArgument(format!(
            "invalid curve type ({a}, {b}) on a quadric"
        )));
    }
    Ok((a - 1) * (b - 1))
}

/// Arithmetic genus of a nodal union of curves with the given genera meeting
/// in `nodes` points in total: `sum g_i + nodes - c + 1`.
///
/// This is additivity of the Euler characteristic, so it also holds for
/// disconnected unions; an empty union has arithmetic genus 1.
pub fn union_genus(genera: &[i64], nodes: i64) -> i64 {
    genera.iter().sum::<i64>() + nodes - genera.len() as i64 + 1
}

/// `deg C' = s(m + 1) - d`.
pub fn residual_degree(d: i64, s: i64, m: i64) -> Result<i64> {
    let deg = s * (m + 1) - d;
    if deg < 0 {
        return Err(Error::InvalidArgument(format!(
            "s(m+1) - d = {deg} is negative for d={d}, s={s}, m={m}"
        )));
    }
    Ok(deg)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub label: String,
    pub degree: i64,
    pub genus: i64,
}

/// Points shared by two components, indexed into the component list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSet {
    pub pair: (usize, usize),
    pub count: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkedCurveData {
    pub degree: i64,
    pub genus: i64,
    /// `deg(R cap C'')`.
    pub r_intersection: i64,
    pub components: Vec<Component>,
    pub nodes: Vec<NodeSet>,
}

impl LinkedCurveData {
    pub fn new(components: Vec<Component>, nodes: Vec<NodeSet>, r_intersection: i64) -> Result<Self> {
        for node in &nodes {
            let (i, j) = node.pair;
            if i == j || i >= components.len() || j >= components.len() || node.count < 0 {
                return Err(Error::InvalidArgument(format!("bad node set {node:?}")));
            }
        }
        let genera: Vec<i64> = components.iter().map(|c| c.genus).collect();
        let total_nodes = nodes.iter().map(|n| n.count).sum();
        Ok(LinkedCurveData {
            degree: components.iter().map(|c| c.degree).sum(),
            genus: union_genus(&genera, total_nodes),
            r_intersection,
            components,
            nodes,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Whether the components form one connected configuration.
    pub fn is_connected(&self) -> bool {
        let n = self.components.len();
        if n <= 1 {
            return true;
        }
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(i) = stack.pop() {
            for node in self.nodes.iter().filter(|node| node.count > 0) {
                let (a, b) = node.pair;
                let next = if a == i {
                    b
                } else if b == i {
                    a
                } else {
                    continue;
                };
                if !reached[next] {
                    reached[next] = true;
                    stack.push(next);
                }
            }
        }
        reached.into_iter().all(|r| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S111: ScrollType = ScrollType::S111;

    #[test]
    fn relation_examples() {
        assert_eq!(genus_relation(S111, 529, 562, 3, 0, 10, 2).unwrap(), 1);
        assert_eq!(genus_relation(S111, 496, 562, 6, 3, 10, 2).unwrap(), 4);
        assert_eq!(genus_relation(S111, 562, 562, 0, 0, 10, 2).unwrap(), 1);
        assert!(genus_relation(ScrollType::S003, 529, 562, 3, 0, 10, 2).is_err());
        assert!(genus_of_linked_curve(ScrollType::S003, 1, 562, 3, 0, 10, 2).is_err());
    }

    #[test]
    fn component_genera() {
        assert_eq!(plane_curve_genus(3).unwrap(), 1);
        assert_eq!(plane_curve_genus(1).unwrap(), 0);
        assert_eq!(plane_curve_genus(11).unwrap(), 45);
        assert!(plane_curve_genus(0).is_err());
        assert_eq!(quadric_type_genus(3, 3).unwrap(), 4);
        assert_eq!(quadric_type_genus(1, 0).unwrap(), 0);
        assert_eq!(quadric_type_genus(11, 11).unwrap(), 100);
        assert!(quadric_type_genus(0, 0).is_err());
    }

    #[test]
    fn unions() {
        assert_eq!(union_genus(&[4, 0], 2), 5);
        assert_eq!(union_genus(&[7], 0), 7);
        assert_eq!(union_genus(&[1, 3, 45], 7), 54);
        assert_eq!(union_genus(&[], 0), 1);
    }

    #[test]
    fn residual_degrees() {
        assert_eq!(residual_degree(96, 9, 10).unwrap(), 3);
        assert_eq!(residual_degree(99, 9, 10).unwrap(), 0);
        assert_eq!(residual_degree(91, 9, 10).unwrap(), 8);
        assert!(residual_degree(100, 9, 10).is_err());
    }

    #[test]
    fn connectivity() {
        let comp = |label: &str, degree, genus| Component {
            label: label.into(),
            degree,
            genus,
        };
        let data = LinkedCurveData::new(
            vec![comp("a", 3, 1), comp("b", 4, 3), comp("c", 11, 45)],
            vec![
                NodeSet { pair: (0, 1), count: 3 },
                NodeSet { pair: (0, 2), count: 3 },
                NodeSet { pair: (1, 2), count: 1 },
            ],
            4,
        )
        .unwrap();
        assert_eq!(data.degree, 18);
        assert_eq!(data.genus, 54);
        assert!(data.is_connected());
        let split = LinkedCurveData::new(vec![comp("a", 3, 1), comp("b", 3, 1)], vec![], 0).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.genus, 1);
        assert!(LinkedCurveData::new(vec![comp("a", 1, 0)], vec![NodeSet { pair: (0, 0), count: 1 }], 0).is_err());
    }

    proptest! {
        #[test]
        fn relation_round_trips(
            pa_c in -10_000i64..10_000,
            pa_y in -10_000i64..10_000,
            deg in 0i64..500,
            r in 0i64..500,
            m in 0i64..200,
            w in 1i64..60,
        ) {
            let pa_cpp = genus_relation(S111, pa_c, pa_y, deg, r, m, w).unwrap();
            prop_assert_eq!(genus_of_linked_curve(S111, pa_cpp, pa_y, deg, r, m, w).unwrap(), pa_c);
            prop_assert_eq!(genus_of_complete_intersection(S111, pa_c, pa_cpp, deg, r, m, w).unwrap(), pa_y);
        }
    }
}
