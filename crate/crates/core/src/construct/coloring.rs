//! Proper edge colouring of the row/element incidence graph of a covering.
//!
//! The graph has a vertex `x_r` per set and `y_c` per element, with an edge
//! `x_r y_c` whenever `c` is not in `P_r`. Bipartite graphs are class one,
//! so max-degree colours always suffice; edges are coloured in lexicographic
//! `(r, c)` order, flipping an alternating path when the two endpoints have
//! no common free colour.

use crate::covering::Covering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteColoring {
    rows: usize,
    cols: usize,
    colours: usize,
    cell: Vec<Option<usize>>,
}

impl BipartiteColoring {
    /// Colour of edge `x_r y_c`, or `None` if there is no such edge.
    pub fn colour(&self, r: usize, c: usize) -> Option<usize> {
        self.cell[r * self.cols + c]
    }

    /// Size of the palette (the maximum degree).
    pub fn num_colours(&self) -> usize {
        self.colours
    }

    pub fn colours_used(&self) -> usize {
        let mut seen = vec![false; self.colours];
        for c in self.cell.iter().flatten() {
            seen[*c] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    /// No two edges sharing an endpoint have the same colour.
    pub fn is_proper(&self) -> bool {
        let mut at_x = vec![vec![false; self.colours]; self.rows];
        let mut at_y = vec![vec![false; self.colours]; self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                if let Some(col) = self.colour(r, c) {
                    if col >= self.colours
                        || std::mem::replace(&mut at_x[r][col], true)
                        || std::mem::replace(&mut at_y[c][col], true)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn konig_edge_color(covering: &Covering) -> BipartiteColoring {
    let (n, m) = (covering.n(), covering.m());
    let deg_x = (0..n).map(|r| m - covering.set(r).len());
    let deg_y = covering.type_vector().iter().map(|&rho| n - rho);
    let delta = deg_x.chain(deg_y).max().unwrap_or(0);
    // x_edge[r][colour] = c, y_edge[c][colour] = r
    let mut x_edge = vec![vec![None::<usize>; delta]; n];
    let mut y_edge = vec![vec![None::<usize>; delta]; m];
    for r in 0..n {
        for c in (0..m).filter(|&c| !covering.contains(r, c)) {
            let a = free_colour(&x_edge[r]);
            let b = free_colour(&y_edge[c]);
            if y_edge[c][a].is_some() {
                flip_path(&mut x_edge, &mut y_edge, c, a, b);
            }
            x_edge[r][a] = Some(c);
            y_edge[c][a] = Some(r);
        }
    }
    let mut cell = vec![None; n * m];
    for (r, slots) in x_edge.iter().enumerate() {
        for (colour, c) in slots.iter().enumerate() {
            if let Some(c) = c {
                cell[r * m + c] = Some(colour);
            }
        }
    }
    BipartiteColoring {
        rows: n,
        cols: m,
        colours: delta,
        cell,
    }
}

fn free_colour(slots: &[Option<usize>]) -> usize {
    slots
        .iter()
        .position(Option::is_none)
        .expect("a vertex below max degree has a free colour")
}

/// Swaps colours `a` and `b` along the path leaving `y_c` by its `a` edge.
fn flip_path(
    x_edge: &mut [Vec<Option<usize>>],
    y_edge: &mut [Vec<Option<usize>>],
    c: usize,
    a: usize,
    b: usize,
) {
    let mut path = Vec::new();
    let mut y = c;
    loop {
        let Some(x) = y_edge[y][a] else { break };
        path.push((x, y, a));
        let Some(next_y) = x_edge[x][b] else { break };
        path.push((x, next_y, b));
        y = next_y;
    }
    for &(x, y, col) in &path {
        x_edge[x][col] = None;
        y_edge[y][col] = None;
    }
    for &(x, y, col) in &path {
        let swapped = if col == a { b } else { a };
        x_edge[x][swapped] = Some(y);
        y_edge[y][swapped] = Some(x);
    }
}
