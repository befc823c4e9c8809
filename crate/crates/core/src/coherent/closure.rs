use std::collections::HashMap;

use rayon::prelude::*;

use super::CoherentConfiguration;

/// Cell signature: current color, transposed color, and the sorted multiset
/// of color pairs seen through every intermediate vertex.
type Signature = (u32, u32, Vec<u64>);

const ROW_BATCH: usize = 32;

/// Coherent closure by two-dimensional Weisfeiler-Leman refinement.
///
/// Every round recolors each cell by its signature; new colors are numbered
/// by first occurrence in row-major order. Stops when a round adds no color.
pub fn wl_closure(c: &CoherentConfiguration) -> CoherentConfiguration {
    let n = c.order();
    let mut colors = c.colors().to_vec();
    let mut count = c.color_count();
    loop {
        let (next, next_count) = refine(&colors, n, count);
        colors = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }
    CoherentConfiguration::from_dense(c.fiber_sizes(), colors, count)
}

fn refine(colors: &[u32], n: usize, count: usize) -> (Vec<u32>, usize) {
    let width = count as u64;
    let mut table: HashMap<Signature, u32> = HashMap::new();
    let mut out = Vec::with_capacity(n * n);
    let rows: Vec<usize> = (0..n).collect();
    for batch in rows.chunks(ROW_BATCH) {
        let sigs: Vec<Vec<Signature>> = batch
            .par_iter()
            .map(|&x| {
                (0..n)
                    .map(|y| {
                        let mut pairs: Vec<u64> = (0..n)
                            .map(|z| colors[x * n + z] as u64 * width + colors[z * n + y] as u64)
                            .collect();
                        pairs.sort_unstable();
                        (colors[x * n + y], colors[y * n + x], pairs)
                    })
                    .collect()
            })
            .collect();
        for sig in sigs.into_iter().flatten() {
            let next = table.len() as u32;
            out.push(*table.entry(sig).or_insert(next));
        }
    }
    let k = table.len();
    (out, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Matrix;

    fn adjacency(n: usize, edge: impl Fn(usize, usize) -> bool) -> CoherentConfiguration {
        let m = Matrix::from_fn(n, n, |i, j| i64::from(i != j && edge(i, j)));
        CoherentConfiguration::from_adjacency(&m).unwrap()
    }

    #[test]
    fn complete_graph_stays_two_colors() {
        let k4 = adjacency(4, |_, _| true);
        assert_eq!(wl_closure(&k4).color_count(), 2);
    }

    #[test]
    fn path_splits_into_orbits() {
        // P3: two diagonals, end-center, center-end, end-end
        let p3 = adjacency(3, |i, j| i.abs_diff(j) == 1);
        let c = wl_closure(&p3);
        assert_eq!(c.color_count(), 5);
        assert_ne!(c.color(0, 0), c.color(1, 1));
        assert_eq!(c.color(0, 0), c.color(2, 2));
    }

    #[test]
    fn incidence_directions_split() {
        let m = Matrix::new(1, 1, vec![1i64]).unwrap();
        let c = wl_closure(&CoherentConfiguration::from_incidence(&m).unwrap());
        assert_eq!(c.color_count(), 4);
        assert_ne!(c.color(0, 1), c.color(1, 0));
    }
}
