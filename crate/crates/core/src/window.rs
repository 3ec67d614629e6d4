//! Fixed-capacity ring buffer over the tail of a byte stream.
//!
//! Positions are absolute and 1-based: the first byte ever pushed is at
//! position 1. The window covers `[tail..=head]`; `head == tail - 1` means
//! the window is empty. The byte at absolute position `k` lives in slot
//! `(k - 1) % capacity`, which is injective over any `capacity` consecutive
//! positions.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TextWindow {
    buf: Vec<u8>,
    tail: u64,
    head: u64,
}

impl TextWindow {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::ZeroCapacity);
        }
        Ok(Self {
            buf: vec![0; capacity],
            tail: 1,
            head: 0,
        })
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.buf.len()
    }

    /// Absolute position of the oldest byte (`head + 1` when empty).
    #[inline]
    pub fn tail(&self) -> u64 {
        self.tail
    }

    /// Absolute position of the newest byte (`tail - 1` when empty).
    #[inline]
    pub fn head(&self) -> u64 {
        self.head
    }

    #[inline]
    pub fn len(&self) -> usize {
        (self.head + 1 - self.tail) as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.head + 1 == self.tail
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.len() == self.capacity()
    }

    #[inline]
    fn slot(&self, pos: u64) -> usize {
        ((pos - 1) % self.buf.len() as u64) as usize
    }

    /// Appends `c` and returns its absolute position.
    pub fn push(&mut self, c: u8) -> Result<u64> {
        if self.is_full() {
            return Err(Error::WindowFull {
                capacity: self.capacity(),
            });
        }
        self.head += 1;
        let slot = self.slot(self.head);
        self.buf[slot] = c;
        Ok(self.head)
    }

    /// Drops the oldest byte and returns the position it occupied.
    pub fn pop(&mut self) -> Result<u64> {
        if self.is_empty() {
            return Err(Error::WindowEmpty);
        }
        self.tail += 1;
        Ok(self.tail - 1)
    }

    pub fn symbol_at(&self, pos: u64) -> Result<u8> {
        if pos < self.tail || pos > self.head {
            return Err(Error::OutOfWindow {
                pos,
                tail: self.tail,
                head: self.head,
            });
        }
        Ok(self.at(pos))
    }

    /// Unchecked access for callers that already hold the window invariant.
    #[inline]
    pub(crate) fn at(&self, pos: u64) -> u8 {
        debug_assert!(
            self.tail <= pos && pos <= self.head,
            "position {pos} out of window"
        );
        self.buf[self.slot(pos)]
    }

    /// Copies `T[from..=to]` out of the ring.
    pub fn substring(&self, from: u64, to: u64) -> Result<Vec<u8>> {
        if from > to {
            return Ok(Vec::new());
        }
        self.symbol_at(from)?;
        self.symbol_at(to)?;
        Ok((from..=to).map(|k| self.at(k)).collect())
    }

    /// The whole window in order.
    pub fn contents(&self) -> Vec<u8> {
        (self.tail..=self.head).map(|k| self.at(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn filled(cap: usize, s: &[u8]) -> TextWindow {
        let mut w = TextWindow::new(cap).unwrap();
        for &c in s {
            w.push(c).unwrap();
        }
        w
    }

    #[test]
    fn first_push_lands_at_one() {
        let mut w = TextWindow::new(3).unwrap();
        assert_eq!((w.tail(), w.head()), (1, 0));
        assert_eq!(w.push(b'a').unwrap(), 1);
        assert_eq!(w.symbol_at(1).unwrap(), b'a');
    }

    #[test]
    fn abaca() {
        let mut w = filled(5, b"abaca");
        assert_eq!(w.symbol_at(3).unwrap(), b'a');
        assert_eq!(w.substring(2, 4).unwrap(), b"bac");
        assert_eq!(w.pop().unwrap(), 1);
        assert_eq!(w.contents(), b"baca");
        assert_eq!(w.tail(), 2);
    }

    #[test]
    fn wraparound() {
        let mut w = filled(2, b"xy");
        assert!(matches!(
            w.push(b'q'),
            Err(Error::WindowFull { capacity: 2 })
        ));
        w.pop().unwrap();
        assert_eq!(w.push(b'z').unwrap(), 3);
        assert_eq!(w.symbol_at(2).unwrap(), b'y');
        assert_eq!(w.symbol_at(3).unwrap(), b'z');
        assert!(w.symbol_at(1).is_err());
    }

    #[test]
    fn pop_to_empty() {
        let mut w = TextWindow::new(8).unwrap();
        for _ in 0..6 {
            w.push(b'q').unwrap();
            w.pop().unwrap();
        }
        w.push(b'r').unwrap();
        assert_eq!((w.tail(), w.head()), (7, 7));
        assert_eq!(w.pop().unwrap(), 7);
        assert!(w.is_empty());
        assert_eq!(w.pop(), Err(Error::WindowEmpty));
        assert!(w.symbol_at(7).is_err());
    }

    #[test]
    fn pop_twice() {
        let mut w = filled(4, b"abc");
        w.pop().unwrap();
        w.pop().unwrap();
        assert!(w.symbol_at(2).is_err());
        assert_eq!(w.symbol_at(3).unwrap(), b'c');
    }

    #[test]
    fn example_window_yy() {
        let w = filled(15, b"abczabcyyabcyyz");
        let l = w.tail();
        assert_eq!(w.symbol_at(l + 7).unwrap(), b'y');
        assert_eq!(w.substring(l + 7, l + 8).unwrap(), b"yy");
    }

    #[test]
    fn zero_capacity() {
        assert_eq!(TextWindow::new(0).unwrap_err(), Error::ZeroCapacity);
    }
}
