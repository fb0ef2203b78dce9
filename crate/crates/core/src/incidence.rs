/// A dense square boolean matrix packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitMatrix {
    size: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        let words_per_row = size.div_ceil(64);
        Self {
            size,
            words_per_row,
            bits: vec![0; size * words_per_row],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.size && col < self.size, "index out of range");
        let word = self.bits[row * self.words_per_row + col / 64];
        word >> (col % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.size && col < self.size, "index out of range");
        let word = &mut self.bits[row * self.words_per_row + col / 64];
        let mask = 1u64 << (col % 64);
        if value {
            *word |= mask;
        } else {
            *word &= !mask;
        }
    }

    /// Number of set entries.
    pub fn count_ones(&self) -> u64 {
        self.bits.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Iterates the `(row, col)` positions of set entries in row-major order.
    pub fn ones(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |r| {
            (0..self.size)
                .filter(move |&c| self.get(r, c))
                .map(move |c| (r, c))
        })
    }

    /// True when every entry set in `self` is also set in `other`.
    pub fn is_subset_of(&self, other: &BitMatrix) -> bool {
        self.size == other.size && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }
}
