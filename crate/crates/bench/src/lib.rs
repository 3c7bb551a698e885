//! Deterministic fixtures for the benchmarks.

use trop_core::{TropMatrix, TropScalar};

/// An `n x n` matrix with small integer entries and a sprinkling of `-inf`,
/// derived from `seed` by a fixed arithmetic pattern.
pub fn fixture(n: usize, seed: u64) -> TropMatrix {
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let h = (seed + 1)
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .wrapping_add((i * 31 + j * 17) as u64)
                .wrapping_mul(0xbf58_476d_1ce4_e5b9);
            let h = h >> 33;
            data.push(if h.is_multiple_of(7) {
                TropScalar::NegInf
            } else {
                TropScalar::int((h % 17) as i64 - 8)
            });
        }
    }
    TropMatrix::new(n, n, data).expect("n > 0")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(fixture(4, 3), fixture(4, 3));
        assert_ne!(fixture(4, 3), fixture(4, 4));
    }
}
