//! Dense row-major tensors and the deterministic primitives built on them:
//! matrix products, row softmax, cosine similarity, and seeded random
//! initialization.
//!
//! Reproducibility rules observed by every routine here:
//! * reductions run in index order (row-major, left-to-right), so results
//!   are bit-stable across runs;
//! * all randomness flows through [`RngState`], a ChaCha8 stream keyed by a
//!   64-bit seed — identical seeds give identical draw sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::scalar::{cast, Scalar};

/// Norm threshold below which cosine similarity is considered undefined.
pub const NORM_EPS: f64 = 1e-12;

/// Dense row-major array of scalars with an explicit shape.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    /// Build a tensor from a shape and row-major data.
    ///
    /// Rejects shape/length disagreements and non-finite entries.
    pub fn from_vec(shape: Vec<usize>, data: Vec<T>) -> Result<Self> {
        let numel: usize = shape.iter().product();
        if numel != data.len() {
            return Err(Error::ShapeMismatch {
                op: "Tensor::from_vec",
                left: shape,
                right: vec![data.len()],
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::config("tensor data", "non-finite entry"));
        }
        Ok(Self { shape, data })
    }

    /// Internal constructor for values produced by operations that already
    /// guarantee shape consistency.
    pub(crate) fn from_parts(shape: Vec<usize>, data: Vec<T>) -> Self {
        debug_assert_eq!(shape.iter().product::<usize>(), data.len());
        Self { shape, data }
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let numel = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![T::zero(); numel],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    /// Number of rows of a rank-2 tensor.
    pub fn rows(&self) -> usize {
        debug_assert_eq!(self.shape.len(), 2, "rows() needs a matrix");
        self.shape[0]
    }

    /// Number of columns of a rank-2 tensor.
    pub fn cols(&self) -> usize {
        debug_assert_eq!(self.shape.len(), 2, "cols() needs a matrix");
        self.shape[1]
    }

    /// Borrow row `r` of a rank-2 tensor.
    pub fn row(&self, r: usize) -> &[T] {
        let c = self.cols();
        &self.data[r * c..(r + 1) * c]
    }

    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [T] {
        let c = self.cols();
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn is_matrix(&self) -> bool {
        self.shape.len() == 2
    }

    /// Element-wise map into a new tensor.
    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Self {
            shape: self.shape.clone(),
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// True when every entry is finite.
    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Largest absolute entry (0 for the empty tensor).
    pub fn max_abs(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, &v| acc.max(v.abs()))
    }

    /// Convert every element, e.g. to widen `f32` data to `f64`.
    pub fn cast_into<U: Scalar>(&self) -> Tensor<U> {
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .map(|v| U::from_f64(v.to_f64().expect("finite scalar")).expect("cast"))
                .collect(),
        }
    }
}

/// Deterministic random stream: ChaCha8 keyed from a 64-bit seed.
///
/// The generator identity is fixed (see [`RngState::ALGORITHM`]); the same
/// seed always replays the same sequence. Sub-streams for independent
/// components are derived with [`RngState::derive`] via SplitMix64 mixing so
/// that component seeds never collide with each other.
#[derive(Debug, Clone)]
pub struct RngState {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RngState {
    /// Label of the one generator this crate uses.
    pub const ALGORITHM: &'static str = "chacha8";

    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent sub-stream labelled by `tag`. Deterministic in
    /// `(self.seed, tag)` and unaffected by draws already taken.
    pub fn derive(&self, tag: u64) -> RngState {
        RngState::new(splitmix64(
            self.seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15),
        ))
    }

    /// Standard normal draw.
    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Matrix of i.i.d. standard normal entries.
    pub fn normal_matrix<T: Scalar>(&mut self, rows: usize, cols: usize) -> Tensor<T> {
        let data = (0..rows * cols).map(|_| cast::<T>(self.normal())).collect();
        Tensor::from_parts(vec![rows, cols], data)
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Matrix product `a (m×k) · b (k×p)`.
///
/// Accumulation for each output element runs over `k` in ascending order,
/// so results are bit-stable. Errors on inner-dimension disagreement.
pub fn matmul<T: Scalar>(a: &Tensor<T>, b: &Tensor<T>) -> Result<Tensor<T>> {
    if !a.is_matrix() || !b.is_matrix() || a.cols() != b.rows() {
        return Err(Error::ShapeMismatch {
            op: "matmul",
            left: a.shape().to_vec(),
            right: b.shape().to_vec(),
        });
    }
    let (m, k, p) = (a.rows(), a.cols(), b.cols());
    let mut out = vec![T::zero(); m * p];
    // ikj order: streams b rows, keeps the per-element k-ascending sum order.
    for i in 0..m {
        let arow = a.row(i);
        let orow = &mut out[i * p..(i + 1) * p];
        for (kk, &aik) in arow.iter().enumerate().take(k) {
            let brow = b.row(kk);
            for j in 0..p {
                orow[j] += aik * brow[j];
            }
        }
    }
    Ok(Tensor::from_parts(vec![m, p], out))
}

/// `a (n×k) · b (p×k)ᵀ`, i.e. dot products of `a` rows with `b` rows.
///
/// This is the layout-friendly form for linear layers whose weights are
/// stored one output channel per row. Same summation-order guarantee as
/// [`matmul`].
pub fn matmul_transpose_b<T: Scalar>(a: &Tensor<T>, b: &Tensor<T>) -> Result<Tensor<T>> {
    if !a.is_matrix() || !b.is_matrix() || a.cols() != b.cols() {
        return Err(Error::ShapeMismatch {
            op: "matmul_transpose_b",
            left: a.shape().to_vec(),
            right: b.shape().to_vec(),
        });
    }
    let (n, k, p) = (a.rows(), a.cols(), b.rows());
    let mut out = vec![T::zero(); n * p];
    for i in 0..n {
        let arow = a.row(i);
        for j in 0..p {
            let brow = b.row(j);
            let mut acc = T::zero();
            for kk in 0..k {
                acc += arow[kk] * brow[kk];
            }
            out[i * p + j] = acc;
        }
    }
    Ok(Tensor::from_parts(vec![n, p], out))
}

/// Transpose of a rank-2 tensor.
pub fn transpose<T: Scalar>(a: &Tensor<T>) -> Tensor<T> {
    let (m, k) = (a.rows(), a.cols());
    let mut out = vec![T::zero(); m * k];
    for i in 0..m {
        for j in 0..k {
            out[j * m + i] = a.data()[i * k + j];
        }
    }
    Tensor::from_parts(vec![k, m], out)
}

/// Numerically stable softmax of one row: subtracts the max before
/// exponentiating. Output sums to 1 and every entry is positive.
pub fn softmax_row<T: Scalar>(v: &[T]) -> Vec<T> {
    debug_assert!(!v.is_empty(), "softmax of an empty row");
    let max = v.iter().fold(T::neg_infinity(), |acc, &x| acc.max(x));
    let exps: Vec<T> = v.iter().map(|&x| (x - max).exp()).collect();
    let sum: T = exps.iter().fold(T::zero(), |acc, &e| acc + e);
    exps.into_iter().map(|e| e / sum).collect()
}

/// Dot product in index order.
pub fn dot<T: Scalar>(u: &[T], v: &[T]) -> T {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = T::zero();
    for i in 0..u.len() {
        acc += u[i] * v[i];
    }
    acc
}

/// Euclidean norm, summed in index order.
pub fn norm<T: Scalar>(v: &[T]) -> T {
    dot(v, v).sqrt()
}

/// Cosine similarity `u·v / (‖u‖‖v‖)`, clamped into `[-1, 1]`.
///
/// Errors when the vectors differ in length or either norm is at most
/// [`NORM_EPS`].
pub fn cosine<T: Scalar>(u: &[T], v: &[T]) -> Result<T> {
    if u.len() != v.len() {
        return Err(Error::ShapeMismatch {
            op: "cosine",
            left: vec![u.len()],
            right: vec![v.len()],
        });
    }
    let nu = norm(u);
    let nv = norm(v);
    let eps = cast::<T>(NORM_EPS);
    if nu <= eps || nv <= eps {
        let bad = if nu <= eps { nu } else { nv };
        return Err(Error::DegenerateNorm {
            op: "cosine",
            norm: bad.to_f64().unwrap_or(0.0),
            eps: NORM_EPS,
        });
    }
    let c = dot(u, v) / (nu * nv);
    Ok(c.min(T::one()).max(-T::one()))
}

/// Kaiming-normal matrix: i.i.d. `N(0, 2/fan_in)` entries with
/// `fan_in = cols`. Pure function of the random stream.
pub fn kaiming_init<T: Scalar>(rng: &mut RngState, rows: usize, cols: usize) -> Tensor<T> {
    assert!(rows >= 1 && cols >= 1, "kaiming_init needs positive dims");
    let std = (2.0 / cols as f64).sqrt();
    let data = (0..rows * cols)
        .map(|_| cast::<T>(rng.normal() * std))
        .collect();
    Tensor::from_parts(vec![rows, cols], data)
}
