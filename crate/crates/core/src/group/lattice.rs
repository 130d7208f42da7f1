//! Integer lattices in Zⁿ, used for homology quotients.

/// Row-echelon (Hermite) basis of the subgroup generated by some vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    rows: Vec<(usize, Vec<i64>)>,
}

impl Lattice {
    pub fn generated_by(dim: usize, gens: &[Vec<i64>]) -> Self {
        let mut pool: Vec<Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        let mut rows = Vec::new();
        for col in 0..dim {
            loop {
                let mut live: Vec<usize> = (0..pool.len()).filter(|&i| pool[i][col] != 0).collect();
                if live.len() <= 1 {
                    break;
                }
                live.sort_by_key(|&i| pool[i][col].abs());
                let p = live[0];
                let pivot = pool[p].clone();
                for &i in &live[1..] {
                    let q = pool[i][col].div_euclid(pivot[col]);
                    for (a, b) in pool[i].iter_mut().zip(&pivot) {
                        *a -= q * b;
                    }
                }
            }
            if let Some(i) = pool.iter().position(|r| r[col] != 0) {
                let mut r = pool.swap_remove(i);
                if r[col] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                rows.push((col, r));
            }
            pool.retain(|r| r.iter().any(|&x| x != 0));
        }
        Lattice { dim, rows }
    }

    /// Canonical representative of `v` modulo the lattice.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(v.len(), self.dim);
        let mut out = v.to_vec();
        for (col, row) in &self.rows {
            let q = out[*col].div_euclid(row[*col]);
            for (a, b) in out.iter_mut().zip(row) {
                *a -= q * b;
            }
        }
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let l = Lattice::generated_by(2, &[vec![0, 1], vec![0, 0]]);
        assert!(l.contains(&[0, 3]));
        assert!(!l.contains(&[1, 3]));
        let l = Lattice::generated_by(2, &[vec![2, 2], vec![0, 4]]);
        assert!(l.contains(&[2, -2]));
        assert!(!l.contains(&[1, 1]));
        assert_eq!(l.reduce(&[5, 9]), vec![1, 1]);
    }

    #[test]
    fn reduction_is_canonical() {
        let l = Lattice::generated_by(2, &[vec![3, 1], vec![1, 2]]);
        let base = l.reduce(&[4, 4]);
        for (p, q) in [(1, 0), (0, 1), (-2, 3), (5, -1)] {
            let v = [4 + 3 * p + q, 4 + p + 2 * q];
            assert_eq!(l.reduce(&v), base);
        }
    }
}
