use super::PointSet;
use crate::hypergraph::Hypergraph;

/// Points `0..n` on a line against all intervals: every run `{a, ..., b}`.
pub fn interval_hypergraph(n: usize) -> Hypergraph {
    let n32 = n as u32;
    let runs = (0..n32).flat_map(|a| (a..n32).map(move |b| (a..=b).collect::<Vec<u32>>())).collect();
    Hypergraph::from_sorted_lists(n, runs)
}

/// Points against axis-parallel rectangles.
///
/// Each distinct hyperedge has exactly one tight bounding box: a column
/// range and a row range whose four extreme lines all carry a member.
/// Enumerating tight boxes gives every hyperedge once.
pub fn rectangle_hypergraph(p: &PointSet) -> Hypergraph {
    let n = p.len();
    let col = p.by_column();
    // row of the point in each column, column of the point in each row
    let col_y: Vec<u32> = col.iter().map(|&v| p.point(v).y).collect();
    let mut row_x = vec![0u32; n];
    for (x, &y) in col_y.iter().enumerate() {
        row_x[y as usize - 1] = x as u32 + 1;
    }
    let mut edges = Vec::new();
    for a in 1..=n as u32 {
        for b in a..=n as u32 {
            let (ya, yb) = (col_y[a as usize - 1], col_y[b as usize - 1]);
            let (cmax, dmin) = (ya.min(yb), ya.max(yb));
            for c in 1..=cmax {
                if !(a..=b).contains(&row_x[c as usize - 1]) {
                    continue;
                }
                for d in dmin..=n as u32 {
                    if !(a..=b).contains(&row_x[d as usize - 1]) {
                        continue;
                    }
                    let mut e: Vec<u32> =
                        (a..=b).filter(|&x| (c..=d).contains(&col_y[x as usize - 1])).map(|x| col[x as usize - 1]).collect();
                    e.sort_unstable();
                    edges.push(e);
                }
            }
        }
    }
    Hypergraph::from_sorted_lists(n, edges)
}
