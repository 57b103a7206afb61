//! Dense matrices over a `Field` with deterministic Gaussian elimination.
//!
//! Pivoting is first-nonzero: for each column the rows at or below the current
//! rank are scanned in index order. Row updates below (and, for the reduced
//! form, above) a pivot are independent and are spread over the rayon pool;
//! every row sees exactly the same sequence of operations as in a sequential
//! sweep, so results do not depend on the thread count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::field::{Field, FieldScalar};
use crate::error::{Error, Result};

/// Work (entries touched per pivot step) above which row updates go parallel.
const PAR_THRESHOLD: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Shape and rank of an eliminated matrix, kept alongside derived objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
}

impl RankCertificate {
    pub fn nullity(&self) -> usize {
        self.cols - self.rank
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub reduced: DenseMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Usage(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(DenseMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Usage("ragged rows".into()));
        }
        let n = rows.len();
        Self::from_vec(field, n, cols, rows.into_iter().flatten().collect())
    }

    /// Build from tagged scalars; every entry must belong to `field`.
    pub fn from_scalars(field: &F, rows: usize, cols: usize, entries: &[FieldScalar]) -> Result<Self> {
        let data = entries
            .iter()
            .enumerate()
            .map(|(i, s)| {
                field.from_scalar(s).ok_or_else(|| {
                    Error::Usage(format!(
                        "entry {i} lives in {:?}, matrix field is {:?}",
                        s.kind(),
                        field.kind()
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_vec(field, rows, cols, data)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_mut(&mut self, r: usize) -> &mut [F::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Usage(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Usage("inner dimensions differ".into()));
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                let neg = f.neg(a);
                let (dst, src) = (
                    &mut out.data[r * other.cols..(r + 1) * other.cols],
                    other.row(k),
                );
                f.sub_mul_assign(dst, src, &neg);
            }
        }
        Ok(out)
    }

    /// Rank by forward elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        echelon(&self.field, &mut data, self.rows, self.cols, false).len()
    }

    pub fn rank_certificate(&self) -> RankCertificate {
        RankCertificate { rows: self.rows, cols: self.cols, rank: self.rank() }
    }

    pub fn rref(&self) -> Rref<F> {
        let mut data = self.data.clone();
        let pivots = echelon(&self.field, &mut data, self.rows, self.cols, true);
        Rref {
            reduced: DenseMatrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data },
            pivots,
        }
    }

    /// Rank together with a kernel basis.
    ///
    /// Basis vector `k` has a one in the `k`-th non-pivot column and zeros in all
    /// other non-pivot columns, so the basis is fully determined by the matrix.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<F::Elem>>) {
        let Rref { reduced, pivots } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let kernel = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![f.zero(); self.cols];
                v[free] = f.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(i, free));
                }
                v
            })
            .collect();
        (pivots.len(), kernel)
    }
}

fn echelon<F: Field>(
    field: &F,
    data: &mut [F::Elem],
    rows: usize,
    cols: usize,
    reduce_above: bool,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for k in c..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = field.inv(&data[r * cols + c]).expect("nonzero pivot");
        field.scale_assign(&mut data[r * cols + c..(r + 1) * cols], &inv);

        let (head, tail) = data.split_at_mut((r + 1) * cols);
        let (above, pivot_row) = head.split_at_mut(r * cols);
        let pivot_row = &pivot_row[c..];
        let update = |row: &mut [F::Elem]| {
            let f = row[c].clone();
            if !field.is_zero(&f) {
                field.sub_mul_assign(&mut row[c..], pivot_row, &f);
            }
        };
        let width = cols - c;
        if (rows - r - 1) * width >= PAR_THRESHOLD {
            tail.par_chunks_mut(cols).for_each(update);
        } else {
            tail.chunks_mut(cols).for_each(update);
        }
        if reduce_above && r > 0 {
            if r * width >= PAR_THRESHOLD {
                above.par_chunks_mut(cols).for_each(update);
            } else {
                above.chunks_mut(cols).for_each(update);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{Fp, Rationals, MERSENNE_61};
    use proptest::prelude::*;

    fn fp() -> Fp {
        Fp::new(MERSENNE_61).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let f = fp();
        let (rank, ker) = DenseMatrix::identity(&f, 3).rank_and_kernel();
        assert_eq!((rank, ker.len()), (3, 0));
        let (rank, ker) = DenseMatrix::zeros(&f, 4, 6).rank_and_kernel();
        assert_eq!((rank, ker.len()), (0, 6));
    }

    #[test]
    fn mixed_field_entries_rejected() {
        let f = Fp::new(101).unwrap();
        let entries = vec![
            FieldScalar::Prime { p: 101, v: 1 },
            FieldScalar::Prime { p: 103, v: 1 },
        ];
        assert!(matches!(
            DenseMatrix::from_scalars(&f, 1, 2, &entries),
            Err(Error::Usage(_))
        ));
        let entries = vec![FieldScalar::Prime { p: 101, v: 1 }, f.to_scalar(&3)];
        assert!(DenseMatrix::from_scalars(&f, 1, 2, &entries).is_ok());
        assert!(DenseMatrix::from_vec(&f, 2, 2, vec![0; 3]).is_err());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f = Rationals;
        let m = DenseMatrix::from_rows(
            &f,
            vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(3), f.from_i64(4)],
                vec![f.from_i64(2), f.from_i64(4), f.from_i64(6), f.from_i64(8)],
                vec![f.from_i64(0), f.from_i64(1), f.from_i64(1), f.from_i64(0)],
            ],
        )
        .unwrap();
        let (rank, ker) = m.rank_and_kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| f.is_zero(x)));
        }
    }

    fn small_int_matrix(n: usize, seed: u64) -> Vec<Vec<i64>> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        // Low-rank structure now and then, so rank deficiency is exercised.
        let k = rng.gen_range(1..=n);
        let a: Vec<Vec<i64>> = (0..n).map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let b: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        (0..n)
            .map(|i| (0..n).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
            .collect()
    }

    fn to_matrix<F: Field>(f: &F, m: &[Vec<i64>]) -> DenseMatrix<F> {
        DenseMatrix::from_rows(f, m.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect())
            .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn modular_rank_matches_rational_rank(seed in any::<u64>()) {
            let m = small_int_matrix(20, seed);
            let rq = to_matrix(&Rationals, &m).rank();
            let rp = to_matrix(&fp(), &m).rank();
            prop_assert_eq!(rq, rp);
        }

        #[test]
        fn rank_is_transpose_and_pivot_order_invariant(seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let f = fp();
            let m = to_matrix(&f, &small_int_matrix(12, seed));
            let r = m.rank();
            prop_assert_eq!(r, m.transpose().rank());
            // A different pivoting order: permute rows and columns before eliminating.
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let mut rp: Vec<usize> = (0..12).collect();
            let mut cp: Vec<usize> = (0..12).collect();
            rp.shuffle(&mut rng);
            cp.shuffle(&mut rng);
            let permuted = DenseMatrix::from_rows(
                &f,
                rp.iter().map(|&i| cp.iter().map(|&j| *m.get(i, j)).collect()).collect(),
            ).unwrap();
            prop_assert_eq!(r, permuted.rank());
            let (rk, ker) = m.rank_and_kernel();
            prop_assert_eq!(rk + ker.len(), 12);
            for v in &ker {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| *x == 0));
            }
        }
    }

    #[test]
    fn parallel_and_sequential_agree_bitwise() {
        use rand::SeedableRng;
        let f = fp();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 300;
        let mut data: Vec<u64> = (0..n * (n + 5)).map(|_| f.random(&mut rng)).collect();
        // Force rank deficiency.
        for c in 0..n + 5 {
            let v = f.add(&data[c], &data[(n + 5) + c]);
            data[2 * (n + 5) + c] = v;
        }
        let m = DenseMatrix::from_vec(&f, n, n + 5, data).unwrap();
        let par = m.rank_and_kernel();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let seq = pool.install(|| m.rank_and_kernel());
        assert_eq!(par, seq);
        assert_eq!(par.0, n - 1);
    }
}
