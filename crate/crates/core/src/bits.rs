use alloc::vec;
use alloc::vec::Vec;

/// Fixed-capacity bit set over `words * 64` slots.
///
/// All the combinatorial search loops run on these; one word covers every
/// instance this crate is asked to handle, but nothing relies on that.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn empty(capacity: usize) -> Bits {
        Bits { words: vec![0; capacity.div_ceil(64).max(1)] }
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Bits {
        let mut b = Bits::empty(capacity);
        for &i in indices {
            b.set(i);
        }
        b
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_and_iterate() {
        let b = Bits::from_indices(130, &[0, 63, 64, 129]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(b.count(), 4);
        assert!(b.contains(64));
        assert!(!b.contains(1));
    }

    #[test]
    fn intersection_and_union() {
        let a = Bits::from_indices(70, &[3, 65]);
        let b = Bits::from_indices(70, &[65]);
        let c = Bits::from_indices(70, &[4]);
        assert!(a.intersects(&b));
        assert!(!a.intersects(&c));
        let mut u = a.clone();
        u.union_with(&c);
        assert_eq!(u.iter().collect::<Vec<_>>(), vec![3, 4, 65]);
    }
}
