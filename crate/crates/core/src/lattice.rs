//! Unit triangles and lozenges on the triangular lattice.
//!
//! Lattice lines are vertical at every integer `x`; the strip between lines
//! `col` and `col + 1` is "column" `col`. Heights are doubled so that every
//! lattice point has integer coordinates `(x, y)`, with unit vertical edges of
//! length 2. A right-pointing triangle `R(col, y)` has its vertical edge on
//! line `col` from `y` to `y + 2` and its apex at `(col + 1, y + 1)`; a
//! left-pointing triangle `L(col, y)` has its vertical edge on line `col + 1`
//! and its apex at `(col, y + 1)`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pointing {
    Left,
    Right,
}

impl Pointing {
    pub fn flip(self) -> Pointing {
        match self {
            Pointing::Left => Pointing::Right,
            Pointing::Right => Pointing::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triangle {
    pub col: i32,
    pub y: i32,
    pub pointing: Pointing,
}

impl Triangle {
    pub fn left(col: i32, y: i32) -> Self {
        Triangle { col, y, pointing: Pointing::Left }
    }

    pub fn right(col: i32, y: i32) -> Self {
        Triangle { col, y, pointing: Pointing::Right }
    }

    /// Corners as `(x, doubled y)`.
    pub fn vertices(&self) -> [(i32, i32); 3] {
        let (c, y) = (self.col, self.y);
        match self.pointing {
            Pointing::Right => [(c, y), (c, y + 2), (c + 1, y + 1)],
            Pointing::Left => [(c + 1, y), (c + 1, y + 2), (c, y + 1)],
        }
    }

    /// The three edge-adjacent triangles together with the orientation of the
    /// lozenge they would form with `self`.
    pub fn neighbors(&self) -> [(Triangle, Orientation); 3] {
        let (c, y) = (self.col, self.y);
        match self.pointing {
            Pointing::Right => [
                (Triangle::left(c, y - 1), Orientation::Negative),
                (Triangle::left(c, y + 1), Orientation::Positive),
                (Triangle::left(c - 1, y), Orientation::Horizontal),
            ],
            Pointing::Left => [
                (Triangle::right(c, y + 1), Orientation::Negative),
                (Triangle::right(c, y - 1), Orientation::Positive),
                (Triangle::right(c + 1, y), Orientation::Horizontal),
            ],
        }
    }

    /// Reflection across the vertical line `x = axis`.
    pub fn mirror(&self, axis: i32) -> Triangle {
        Triangle { col: 2 * axis - 1 - self.col, y: self.y, pointing: self.pointing.flip() }
    }
}

/// Lozenge orientations. Horizontal lozenges straddle a vertical lattice
/// line; positive and negative ones lie inside a single column with their
/// slanted sides rising or falling to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Positive,
    Negative,
}

/// Two edge-adjacent unit triangles, stored as (left-pointing, right-pointing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lozenge {
    pub left: Triangle,
    pub right: Triangle,
    pub orientation: Orientation,
}

impl Lozenge {
    /// Pairs two triangles, returning `None` unless they share an edge.
    pub fn new(a: Triangle, b: Triangle) -> Option<Lozenge> {
        let (left, right) = match (a.pointing, b.pointing) {
            (Pointing::Left, Pointing::Right) => (a, b),
            (Pointing::Right, Pointing::Left) => (b, a),
            _ => return None,
        };
        left.neighbors()
            .iter()
            .find(|(t, _)| *t == right)
            .map(|&(_, orientation)| Lozenge { left, right, orientation })
    }

    /// Column of a non-horizontal lozenge counted from a right boundary on
    /// line `right_boundary`: the number of full columns strictly between its
    /// right edge and the boundary.
    pub fn column_from_right(&self, right_boundary: i32) -> i32 {
        right_boundary - self.left.col - 1
    }

    pub fn mirror(&self, axis: i32) -> Lozenge {
        Lozenge::new(self.left.mirror(axis), self.right.mirror(axis))
            .expect("reflection preserves adjacency")
    }

    /// Corners in drawing order.
    pub fn outline(&self) -> [(i32, i32); 4] {
        let l = self.left.vertices();
        let r = self.right.vertices();
        match self.orientation {
            // L's apex, L's bottom, R's apex, L's top
            Orientation::Horizontal => [l[2], l[0], r[2], l[1]],
            // R sits above L
            Orientation::Negative => [l[0], l[1], r[1], r[0]],
            Orientation::Positive => [r[0], r[1], l[1], l[0]],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric() {
        for t in [Triangle::left(2, 3), Triangle::right(-1, 4)] {
            for (nb, o) in t.neighbors() {
                let back = nb.neighbors();
                assert!(back.iter().any(|&(x, o2)| x == t && o2 == o));
                // shared edge: exactly two common vertices
                let common = t.vertices().iter().filter(|v| nb.vertices().contains(v)).count();
                assert_eq!(common, 2);
            }
        }
    }

    #[test]
    fn mirror_swaps_slants() {
        let neg = Lozenge::new(Triangle::left(0, 0), Triangle::right(0, 1)).unwrap();
        assert_eq!(neg.orientation, Orientation::Negative);
        assert_eq!(neg.mirror(1).orientation, Orientation::Positive);
        let hor = Lozenge::new(Triangle::left(0, 4), Triangle::right(1, 4)).unwrap();
        assert_eq!(hor.mirror(1), hor);
        assert!(Lozenge::new(Triangle::left(0, 0), Triangle::right(3, 0)).is_none());
    }
}
