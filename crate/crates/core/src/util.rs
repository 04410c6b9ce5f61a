//! Small enumeration helpers.

use crate::Color;

/// Advances `tuple` to the lexicographic successor in `[1..=q]^len`.
/// Returns `false` (leaving the tuple at all ones) after the last tuple.
pub(crate) fn next_tuple(tuple: &mut [Color], q: usize) -> bool {
    for slot in tuple.iter_mut().rev() {
        if (*slot as usize) < q {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

/// Rearranges `perm` into the next permutation in lexicographic order.
pub(crate) fn next_permutation<T: Ord>(perm: &mut [T]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Advances a sorted `k`-combination of `0..n` to its lexicographic successor.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub(crate) fn combinations<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        out.push(comb.iter().map(|&i| items[i]).collect());
        if k == 0 || !next_combination(&mut comb, n) {
            break;
        }
    }
    out
}

/// `n choose k` with saturation at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_enumerate_in_order() {
        let mut t = vec![1, 1];
        let mut seen = vec![t.clone()];
        while next_tuple(&mut t, 3) {
            seen.push(t.clone());
        }
        assert_eq!(seen.len(), 9);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn permutations_count() {
        let mut p = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![1, 2, 3, 4]);
    }

    #[test]
    fn combinations_match_binomial() {
        let items: Vec<usize> = (0..7).collect();
        for k in 0..=7 {
            assert_eq!(combinations(&items, k).len() as u128, binomial(7, k as u64));
        }
        assert!(combinations(&items, 8).is_empty());
        assert_eq!(binomial(24, 3), 2024);
    }
}
