//! Word-slice helpers shared by `Graph` rows and `VertexSet`.
//!
//! All sets over `0..n` are stored as little-endian `u64` words; bit `i` of
//! word `i / 64` is element `i`. Slices passed to the binary operations must
//! have equal length.

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

#[inline]
pub(crate) fn get(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

#[inline]
pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
}

#[inline]
pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1u64 << (i % WORD_BITS));
}

#[inline]
pub(crate) fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

#[inline]
pub(crate) fn and_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

#[inline]
pub(crate) fn or_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

#[inline]
pub(crate) fn and_not_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

/// True when `a` and `b` share no element.
#[inline]
pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// True when every element of `a` lies in `b`.
#[inline]
pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Mask covering `0..n`, applied to the last word.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut words = vec![u64::MAX; words_for(n)];
    trim(&mut words, n);
    if n == 0 {
        words.fill(0);
    }
    words
}

/// Zero out bits at positions `>= n`.
pub(crate) fn trim(words: &mut [u64], n: usize) {
    let rem = n % WORD_BITS;
    if rem != 0 {
        let last = n / WORD_BITS;
        words[last] &= (1u64 << rem) - 1;
        for w in words.iter_mut().skip(last + 1) {
            *w = 0;
        }
    } else if n == 0 {
        words.fill(0);
    }
}

pub(crate) fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(if w == 0 { None } else { Some(w) }, |&w| {
            let w = w & (w - 1);
            if w == 0 {
                None
            } else {
                Some(w)
            }
        })
        .map(move |w| wi * WORD_BITS + w.trailing_zeros() as usize)
    })
}
