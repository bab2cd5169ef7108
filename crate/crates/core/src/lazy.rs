//! Arrays with constant-time reset.
//!
//! Every cell carries the epoch in which it was last written. Bumping the
//! structure's epoch invalidates all cells at once, so scratch space can be
//! reused across queries without an O(len) clear. Backing storage is
//! zero-filled on allocation, which the allocator serves from fresh pages.

/// A fixed-size array whose cells start out uninitialised.
#[derive(Debug, Clone)]
pub struct LazyArray<T> {
    stamps: Vec<u32>,
    values: Vec<T>,
    epoch: u32,
}

impl<T: Copy + Default> LazyArray<T> {
    pub fn new(len: usize) -> Self {
        LazyArray {
            stamps: vec![0; len],
            values: vec![T::default(); len],
            epoch: 1,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.stamps.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.stamps.is_empty()
    }

    /// Returns `None` for cells not written since the last reset.
    #[inline]
    pub fn get(&self, index: usize) -> Option<T> {
        if self.stamps[index] == self.epoch {
            Some(self.values[index])
        } else {
            None
        }
    }

    #[inline]
    pub fn is_set(&self, index: usize) -> bool {
        self.stamps[index] == self.epoch
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: T) {
        self.stamps[index] = self.epoch;
        self.values[index] = value;
    }

    /// Forget every written cell.
    pub fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            // stamps from 2^32 resets ago would alias; clear for real
            self.stamps.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }
}
