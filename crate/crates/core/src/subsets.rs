//! Fixed-cardinality 0/1 indicator vectors and their lexicographic successor.
//!
//! Iterating `next_subset` from `[1^k, 0^(n-k)]` visits each k-subset of
//! {1..n} exactly once, in the lexicographic order of the sorted index
//! tuples, and ends on the fixpoint `[0^(n-k), 1^k]`.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetIndicator {
    bits: Vec<bool>,
}

impl SubsetIndicator {
    /// The first k-subset in the iteration order: `[1^k, 0^(n-k)]`.
    pub fn first(n: usize, k: usize) -> Self {
        assert!(k <= n, "subset size exceeds ground set");
        let mut bits = vec![false; n];
        bits[..k].fill(true);
        SubsetIndicator { bits }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        SubsetIndicator { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// 1-based positions of the ones, ascending.
    pub fn ones(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
            .collect()
    }

    /// True exactly for the fixpoints of `next_subset`: no 1 strictly left
    /// of a 0, i.e. the indicator is `[0^(n-k), 1^k]`.
    pub fn is_right_packed(&self) -> bool {
        let first_one = self.bits.iter().position(|&b| b);
        match first_one {
            None => true,
            Some(i) => self.bits[i..].iter().all(|&b| b),
        }
    }

    /// The lexicographic successor among indicators with the same number of
    /// ones; fixpoints return themselves unchanged.
    pub fn next_subset(&self) -> Self {
        let bits = &self.bits;
        let n = bits.len();
        let Some(last_zero) = bits.iter().rposition(|&b| !b) else {
            return self.clone();
        };
        let trailing_ones = n - 1 - last_zero;
        let Some(j) = bits[..last_zero].iter().rposition(|&b| b) else {
            return self.clone();
        };
        let mut out = vec![false; n];
        out[..j].copy_from_slice(&bits[..j]);
        out[j + 1] = true;
        for t in 0..trailing_ones {
            out[j + 2 + t] = true;
        }
        SubsetIndicator { bits: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ind(bits: &[u8]) -> SubsetIndicator {
        SubsetIndicator::from_bits(bits.iter().map(|&b| b != 0).collect())
    }

    #[test]
    fn successor_chain_on_two_of_four() {
        let a = ind(&[1, 1, 0, 0]);
        let b = a.next_subset();
        assert_eq!(b, ind(&[1, 0, 1, 0]));
        assert_eq!(b.next_subset(), ind(&[1, 0, 0, 1]));
    }

    #[test]
    fn right_packed_indicators_are_fixpoints() {
        for bits in [
            &[0u8, 0, 1, 1][..],
            &[1, 1, 1, 1][..],
            &[0, 0, 0, 0][..],
            &[0, 1][..],
            &[][..],
        ] {
            let x = ind(bits);
            assert!(x.is_right_packed());
            assert_eq!(x.next_subset(), x);
        }
        assert!(!ind(&[1, 0]).is_right_packed());
    }

    #[test]
    fn ones_positions_are_one_based_ascending() {
        assert_eq!(ind(&[1, 0, 1, 1]).ones(), vec![1, 3, 4]);
        assert_eq!(SubsetIndicator::first(5, 2).ones(), vec![1, 2]);
    }

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut c = 1usize;
        for i in 0..k {
            c = c * (n - i) / (i + 1);
        }
        c
    }

    #[test]
    fn full_iteration_counts_binomials_up_to_eight() {
        for n in 0..=8 {
            for k in 0..=n {
                let mut x = SubsetIndicator::first(n, k);
                let mut seen = std::collections::BTreeSet::new();
                loop {
                    assert!(seen.insert(x.ones()), "revisited {:?}", x.ones());
                    let next = x.next_subset();
                    if next == x {
                        break;
                    }
                    x = next;
                }
                assert_eq!(seen.len(), binomial(n, k), "count for n={n} k={k}");
                assert!(x.is_right_packed());
            }
        }
    }

    proptest! {
        #[test]
        fn successor_preserves_cardinality_and_increases(bits in proptest::collection::vec(any::<bool>(), 0..12)) {
            let x = SubsetIndicator::from_bits(bits);
            let y = x.next_subset();
            prop_assert_eq!(y.count_ones(), x.count_ones());
            if y != x {
                prop_assert!(y.ones() > x.ones(), "not lexicographically increasing");
            } else {
                prop_assert!(x.is_right_packed());
            }
        }
    }
}
