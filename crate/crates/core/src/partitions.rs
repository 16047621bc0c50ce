//! Integer partitions and standard Young tableau counts.
//!
//! `hook_count` is the production route (hook length formula);
//! `syt_enumerate` is a brute-force backtracking count kept as an
//! independent oracle for small shapes.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{factorial, factorial_int, Int, Rat};

/// Default box cap for the brute-force tableau enumerator.
pub const SYT_ENUMERATE_CAP: u64 = 12;

/// Weakly decreasing vector of nonnegative parts. Trailing zeros are
/// stripped on construction so equal shapes compare (and hash) equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Input(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `rows` copies of `width`.
    pub fn rectangle(rows: usize, width: u32) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![width; rows],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition { parts }
    }
}

/// Number of standard Young tableaux of `shape`, via
/// `size! / prod(hook lengths)`.
pub fn hook_count(shape: &Partition) -> Int {
    let conj = shape.conjugate();
    let mut denom = BigInt::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len as usize {
            let arm = len as u64 - c as u64 - 1;
            let leg = conj.parts()[c] as u64 - r as u64 - 1;
            denom *= BigInt::from(arm + leg + 1);
        }
    }
    factorial_int(shape.size()) / denom
}

/// Count standard Young tableaux by explicit backtracking over
/// row/column-increasing fillings. Refuses shapes above the default cap.
pub fn syt_enumerate(shape: &Partition) -> Result<Int> {
    syt_enumerate_capped(shape, SYT_ENUMERATE_CAP)
}

pub fn syt_enumerate_capped(shape: &Partition, cap: u64) -> Result<Int> {
    if shape.size() > cap {
        return Err(Error::Cap(format!(
            "{} boxes exceeds the enumeration cap of {cap}",
            shape.size()
        )));
    }
    fn count(filled: &mut [u32], remaining: u64, shape: &[u32]) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            // the next entry can extend row r iff the row has room and stays
            // strictly shorter than the row above
            if filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]) {
                filled[r] += 1;
                total += count(filled, remaining - 1, shape);
                filled[r] -= 1;
            }
        }
        total
    }
    let mut filled = vec![0u32; shape.rows()];
    Ok(Int::from(count(&mut filled, shape.size(), shape.parts())))
}

/// Rectangle tableau constant
/// `c0 = (k(n-k))! * prod_{i=1..k} (i-1)! / (n-k+i-1)!`
/// — the number of standard Young tableaux of the `k x (n-k)` rectangle,
/// and the symplectic volume of the orbit in the series normalization used
/// by the localization module.
pub fn c0(k: u32, n: u32) -> Result<Rat> {
    if k < 1 || k >= n {
        return Err(Error::Input(format!("need 1 <= k < n, got k={k}, n={n}")));
    }
    let nk = (n - k) as u64;
    let mut acc = factorial(k as u64 * nk);
    for i in 1..=k as u64 {
        acc *= factorial(i - 1) / factorial(nk + i - 1);
    }
    // the closed form counts the rectangle tableaux
    let rect = Partition::rectangle(k as usize, n - k);
    if acc != Rat::from_integer(hook_count(&rect)) {
        return Err(Error::Internal(format!(
            "c0({k},{n}) disagrees with the rectangle hook count"
        )));
    }
    Ok(acc)
}

/// The `k`-row shape `(w,...,w) + chi`.
pub fn rect_plus(k: u32, w: u32, chi: &Partition) -> Result<Partition> {
    if chi.rows() > k as usize {
        return Err(Error::Input(format!(
            "chi has {} parts, more than the {k} rows available",
            chi.rows()
        )));
    }
    let parts = (0..k as usize)
        .map(|i| w + chi.parts().get(i).copied().unwrap_or(0))
        .collect();
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_rules() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).size(), 0);
    }

    #[test]
    fn hook_counts() {
        assert_eq!(hook_count(&p(&[7])), Int::from(1));
        assert_eq!(hook_count(&p(&[2, 2])), Int::from(2));
        assert_eq!(hook_count(&p(&[3, 3])), Int::from(5));
        assert_eq!(hook_count(&Partition::empty()), Int::from(1));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(syt_enumerate(&p(&[1, 1, 1])).unwrap(), Int::from(1));
        assert_eq!(syt_enumerate(&p(&[2, 1])).unwrap(), Int::from(2));
        assert_eq!(syt_enumerate(&p(&[2, 2])).unwrap(), Int::from(2));
    }

    #[test]
    fn enumeration_cap() {
        assert!(syt_enumerate(&p(&[7, 6])).is_err());
        assert!(syt_enumerate_capped(&p(&[7, 6]), 13).is_ok());
    }

    #[test]
    fn hook_equals_enumeration_on_small_shapes() {
        // every partition with at most 8 boxes
        fn shapes(total: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(prefix.clone()).unwrap());
            for part in (1..=max.min(total)).rev() {
                prefix.push(part);
                shapes(total - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        shapes(8, 8, &mut Vec::new(), &mut all);
        for shape in all {
            assert_eq!(
                hook_count(&shape),
                syt_enumerate(&shape).unwrap(),
                "mismatch at {shape:?}"
            );
        }
    }

    #[test]
    fn c0_values() {
        for n in 2..=9 {
            assert_eq!(c0(1, n).unwrap(), rat(1), "c0(1,{n})");
        }
        assert_eq!(c0(2, 4).unwrap(), rat(2));
        assert_eq!(c0(1, 2).unwrap(), rat(1));
        assert_eq!(c0(3, 6).unwrap(), rat(42));
        assert!(c0(0, 3).is_err());
        assert!(c0(3, 3).is_err());
    }

    #[test]
    fn c0_transpose_symmetry() {
        for n in 2..=8u32 {
            for k in 1..n {
                assert_eq!(c0(k, n).unwrap(), c0(n - k, n).unwrap());
                assert_eq!(
                    c0(k, n).unwrap(),
                    Rat::from_integer(hook_count(&rect_plus(k, n - k, &Partition::empty()).unwrap()))
                );
            }
        }
    }

    #[test]
    fn rect_plus_examples() {
        assert_eq!(rect_plus(2, 2, &Partition::empty()).unwrap(), p(&[2, 2]));
        assert_eq!(rect_plus(2, 2, &p(&[2, 1])).unwrap(), p(&[4, 3]));
        assert_eq!(rect_plus(3, 1, &p(&[1, 1, 1])).unwrap(), p(&[2, 2, 2]));
        assert!(rect_plus(1, 2, &p(&[1, 1])).is_err());
    }
}
