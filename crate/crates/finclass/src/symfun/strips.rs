//! Removable border strips of a Ferrers diagram.
//!
//! A strip of size `k` removable from `lambda` corresponds to a beta-set
//! element `b >= k` with `b - k` not in the beta-set; its height is the
//! number of beta values strictly between `b - k` and `b`.

use super::Partition;

/// One removable border strip, with the cells it occupies and the shape left
/// after removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderStrip {
    /// Cells as `(row, col)`, zero-indexed, row-major.
    pub cells: Vec<(usize, usize)>,
    /// One less than the number of rows the strip meets.
    pub height: u32,
    /// The diagram after removal.
    pub remainder: Partition,
}

impl BorderStrip {
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Connectedness: consecutive cells share an edge when ordered along the
    /// strip (used by the test oracles).
    pub fn is_connected(&self) -> bool {
        let set: std::collections::HashSet<_> = self.cells.iter().copied().collect();
        if self.cells.is_empty() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![self.cells[0]];
        seen.insert(self.cells[0]);
        while let Some((r, c)) = stack.pop() {
            let mut push = |cell: (usize, usize)| {
                if set.contains(&cell) && seen.insert(cell) {
                    stack.push(cell);
                }
            };
            push((r + 1, c));
            push((r, c + 1));
            if r > 0 {
                push((r - 1, c));
            }
            if c > 0 {
                push((r, c - 1));
            }
        }
        seen.len() == self.cells.len()
    }

    /// No 2x2 square inside the strip.
    pub fn has_no_square(&self) -> bool {
        let set: std::collections::HashSet<_> = self.cells.iter().copied().collect();
        !self.cells.iter().any(|&(r, c)| {
            set.contains(&(r + 1, c)) && set.contains(&(r, c + 1)) && set.contains(&(r + 1, c + 1))
        })
    }
}

/// All border strips of size exactly `k` removable from `lambda`.
pub fn border_strips(lambda: &Partition, k: u32) -> Vec<BorderStrip> {
    assert!(k >= 1, "strip size must be positive");
    let len = lambda.len().max(1);
    let beta = lambda.beta_set(len);
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let mut new_beta = beta.clone();
        new_beta[idx] = b - k;
        let height = beta
            .iter()
            .filter(|&&x| x > b - k && x < b)
            .count() as u32;
        let remainder = Partition::from_beta_set(new_beta);
        let cells = diagram_difference(lambda, &remainder);
        debug_assert_eq!(cells.len(), k as usize);
        let strip = BorderStrip {
            cells,
            height,
            remainder,
        };
        debug_assert!(strip.is_connected() && strip.has_no_square());
        out.push(strip);
    }
    out
}

fn diagram_difference(big: &Partition, small: &Partition) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for row in 0..big.len() {
        for col in small.part(row) as usize..big.part(row) as usize {
            cells.push((row, col));
        }
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn whole_shape_with_square_is_no_strip() {
        // (3,2) contains a 2x2 square, so no 5-strip exists
        assert!(border_strips(&p(&[3, 2]), 5).is_empty());
    }

    #[test]
    fn hook_shape_is_one_strip() {
        let strips = border_strips(&p(&[3, 1, 1]), 5);
        assert_eq!(strips.len(), 1);
        assert_eq!(strips[0].height, 2); // meets 3 rows
        assert!(strips[0].remainder.is_empty());
    }

    #[test]
    fn single_row() {
        for n in 1..=6 {
            let strips = border_strips(&p(&[n]), n);
            assert_eq!(strips.len(), 1);
            assert_eq!(strips[0].height, 0);
        }
    }

    #[test]
    fn strip_invariants_exhaustive() {
        for n in 1..=9u32 {
            for lambda in super::super::partitions_of(n) {
                for k in 1..=n {
                    for strip in border_strips(&lambda, k) {
                        assert_eq!(strip.size(), k as usize);
                        assert!(strip.is_connected());
                        assert!(strip.has_no_square());
                        assert_eq!(strip.remainder.size(), n - k);
                        // removal leaves a Ferrers diagram by construction;
                        // the remainder must sit inside lambda
                        for i in 0..strip.remainder.len() {
                            assert!(strip.remainder.part(i) <= lambda.part(i));
                        }
                        // height equals rows met minus one
                        let rows: std::collections::HashSet<_> =
                            strip.cells.iter().map(|&(r, _)| r).collect();
                        assert_eq!(strip.height as usize, rows.len() - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn strips_of_the_l_shape() {
        // (2,1): no removable 2-strip (each candidate breaks the diagram),
        // two 1-strips (the corner cells), one 3-strip (the whole hook)
        assert!(border_strips(&p(&[2, 1]), 2).is_empty());
        assert_eq!(border_strips(&p(&[2, 1]), 1).len(), 2);
        let whole = border_strips(&p(&[2, 1]), 3);
        assert_eq!(whole.len(), 1);
        assert_eq!(whole[0].height, 1);
    }
}
