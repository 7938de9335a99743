//! Flat tables of fixed-width element bitsets.

/// `rows` bitsets of `words` 64-bit words each, stored contiguously.
#[derive(Clone, Debug)]
pub struct BitTable {
    words: usize,
    data: Vec<u64>,
}

impl BitTable {
    pub fn words_for(bits: usize) -> usize {
        bits.div_ceil(64).max(1)
    }

    pub fn new(rows: usize, bits: usize) -> Self {
        let words = Self::words_for(bits);
        Self { words, data: vec![0; rows * words] }
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    #[inline]
    pub fn set(&mut self, r: usize, bit: usize) {
        self.data[r * self.words + bit / 64] |= 1 << (bit % 64);
    }
}

#[inline]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[inline]
pub fn union_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x | y;
    }
}

#[inline]
pub fn count_ones(a: &[u64]) -> usize {
    a.iter().map(|w| w.count_ones() as usize).sum()
}
