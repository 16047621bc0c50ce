//! Symmetric functions: the Vandermonde product, Schur polynomials by two
//! independent routes, and decomposition of symmetric cubics in the Schur
//! basis {S_(3), S_(2,1), S_(1,1,1)}.
//!
//! The bialternant route divides the alternant determinant
//! `|m_j^(lambda_i + n - i)|` by the Vandermonde determinant exactly; the
//! tableau route sums content monomials over semistandard fillings. The two
//! agree and are tested against each other.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::partitions::Partition;
use crate::rational::Rat;

/// Maximum variable count for the exact alternant determinant.
pub const BIALTERNANT_NVARS_CAP: usize = 7;
/// Default caps for the semistandard tableau route.
pub const SSYT_BOX_CAP: u64 = 6;
pub const SSYT_NVARS_CAP: usize = 6;

/// `prod_{i<j} (m_i - m_j)`; the empty product (nvars = 1) is 1.
pub fn vandermonde(nvars: usize) -> MultiPoly {
    let mut acc = MultiPoly::one(nvars);
    for i in 0..nvars {
        for j in (i + 1)..nvars {
            let diff = &MultiPoly::var(nvars, i) - &MultiPoly::var(nvars, j);
            acc = &acc * &diff;
        }
    }
    acc
}

/// Determinant of a square polynomial matrix by cofactor expansion along the
/// top row, memoized over column subsets.
fn poly_det(mat: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = mat.len();
    let nvars = mat[0][0].nvars();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    // minor over the last `popcount(mask)` rows and the columns in `mask`
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    for mask in 1u32..(1 << n) {
        let cols: Vec<usize> = (0..n).filter(|c| mask & (1 << c) != 0).collect();
        let row = n - cols.len();
        let mut acc = MultiPoly::zero(nvars);
        for (idx, &c) in cols.iter().enumerate() {
            let sub = if cols.len() == 1 {
                MultiPoly::one(nvars)
            } else {
                memo[&(mask & !(1 << c))].clone()
            };
            let term = &mat[row][c] * &sub;
            acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        memo.insert(mask, acc);
    }
    memo.remove(&((1u32 << n) - 1)).unwrap()
}

/// Schur polynomial as the alternant quotient `|m_j^(lambda_i + n - i)| / V`.
pub fn schur_bialternant(lambda: &Partition, nvars: usize) -> Result<MultiPoly> {
    if nvars == 0 || nvars > BIALTERNANT_NVARS_CAP {
        return Err(Error::Cap(format!(
            "bialternant determinant supports 1..={BIALTERNANT_NVARS_CAP} variables, got {nvars}"
        )));
    }
    if lambda.rows() > nvars {
        return Err(Error::Input(format!(
            "shape with {} rows does not fit in {nvars} variables",
            lambda.rows()
        )));
    }
    let n = nvars;
    let mat: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let li = lambda.parts().get(i).copied().unwrap_or(0);
            let e = li + (n - 1 - i) as u32;
            (0..n)
                .map(|j| {
                    let mut exps = vec![0u32; n];
                    exps[j] = e;
                    MultiPoly::monomial(n, exps, Rat::one())
                })
                .collect()
        })
        .collect();
    let alternant = poly_det(&mat);
    alternant.divide_exact(&vandermonde(n)).map_err(|_| {
        Error::Internal("alternant not divisible by the Vandermonde product".into())
    })
}

/// Schur polynomial as the content-monomial sum over semistandard tableaux
/// (rows weakly increasing, columns strictly increasing, entries in
/// 1..=nvars). Independent combinatorial oracle for the bialternant route.
pub fn schur_ssyt(lambda: &Partition, nvars: usize) -> Result<MultiPoly> {
    schur_ssyt_capped(lambda, nvars, SSYT_BOX_CAP, SSYT_NVARS_CAP)
}

pub fn schur_ssyt_capped(
    lambda: &Partition,
    nvars: usize,
    box_cap: u64,
    nvars_cap: usize,
) -> Result<MultiPoly> {
    if lambda.size() > box_cap || nvars > nvars_cap {
        return Err(Error::Cap(format!(
            "ssyt enumeration capped at {box_cap} boxes and {nvars_cap} variables"
        )));
    }
    let shape: Vec<u32> = lambda.parts().to_vec();
    let rows = shape.len();
    let mut out = MultiPoly::zero(nvars);
    if rows > nvars {
        return Ok(out); // no column-strict filling exists
    }
    // fill in row-major order; grid[r][c] holds the entry (1-based value)
    fn fill(
        r: usize,
        c: usize,
        shape: &[u32],
        nvars: usize,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        out: &mut MultiPoly,
    ) {
        let rows = shape.len();
        if r == rows {
            *out = &*out + &MultiPoly::monomial(nvars, content.clone(), Rat::one());
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let left = if c > 0 { grid[r][c - 1] } else { 1 };
            let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
            left.max(above)
        };
        for v in lo..=nvars as u32 {
            grid[r][c] = v;
            content[(v - 1) as usize] += 1;
            fill(nr, nc, shape, nvars, grid, content, out);
            content[(v - 1) as usize] -= 1;
        }
    }
    if shape.is_empty() {
        return Ok(MultiPoly::one(nvars));
    }
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&w| vec![0; w as usize]).collect();
    let mut content = vec![0u32; nvars];
    fill(0, 0, &shape, nvars, &mut grid, &mut content, &mut out);
    Ok(out)
}

/// True iff `p` is invariant under every adjacent-variable transposition
/// (which generate the full symmetric group).
pub fn is_symmetric(p: &MultiPoly) -> bool {
    (1..p.nvars()).all(|i| p.swap_vars(i - 1, i) == *p)
}

/// Coefficients of a symmetric cubic in the basis {S_(3), S_(2,1), S_(1,1,1)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurBasisCoeffs3 {
    pub s3: Rat,
    pub s21: Rat,
    pub s111: Rat,
}

impl SchurBasisCoeffs3 {
    pub fn scale(&self, s: &Rat) -> Self {
        SchurBasisCoeffs3 {
            s3: &self.s3 * s,
            s21: &self.s21 * s,
            s111: &self.s111 * s,
        }
    }

    /// `a*S3 + b*S21 + c*S111` in `nvars` variables.
    pub fn reconstruct(&self, nvars: usize) -> Result<MultiPoly> {
        let s3 = schur_bialternant(&Partition::new(vec![3])?, nvars)?;
        let s21 = schur_bialternant(&Partition::new(vec![2, 1])?, nvars)?;
        let s111 = schur_bialternant(&Partition::new(vec![1, 1, 1])?, nvars)?;
        Ok(&(&s3.scale(&self.s3) + &s21.scale(&self.s21)) + &s111.scale(&self.s111))
    }
}

/// Decompose a symmetric homogeneous cubic in at least three variables in
/// the degree-3 Schur basis, by reading the coefficients of `m1^3`,
/// `m1^2 m2`, and `m1 m2 m3`:
///
/// ```text
/// [m1^3]      = a
/// [m1^2 m2]   = a + b
/// [m1 m2 m3]  = a + 2b + c
/// ```
///
/// The reconstruction is verified exactly before returning.
pub fn decompose_deg3(p: &MultiPoly) -> Result<SchurBasisCoeffs3> {
    let n = p.nvars();
    if n < 3 {
        return Err(Error::Input(format!(
            "the degree-3 Schur basis needs at least 3 variables, got {n}"
        )));
    }
    if !p.is_zero() && p.homogeneous_degree() != Some(3) {
        return Err(Error::Input("polynomial is not homogeneous of degree 3".into()));
    }
    if !is_symmetric(p) {
        return Err(Error::Input("polynomial is not symmetric".into()));
    }
    let mut e3 = vec![0u32; n];
    e3[0] = 3;
    let mut e21 = vec![0u32; n];
    e21[0] = 2;
    e21[1] = 1;
    let mut e111 = vec![0u32; n];
    e111[0] = 1;
    e111[1] = 1;
    e111[2] = 1;
    let c1 = p.coeff(&e3);
    let c2 = p.coeff(&e21);
    let c3 = p.coeff(&e111);
    let a = c1.clone();
    let b = &c2 - &c1;
    let c = c3 - &b - &b - c1;
    let coeffs = SchurBasisCoeffs3 { s3: a, s21: b, s111: c };
    if coeffs.reconstruct(n)? != *p {
        return Err(Error::Input(
            "polynomial is not in the span of {S3, S21, S111}".into(),
        ));
    }
    Ok(coeffs)
}
