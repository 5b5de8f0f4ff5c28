//! Reduced words for free groups and right-angled Artin groups.
//!
//! Raag elements are stored in lexicographic normal form: among all reduced
//! words representing the element (which differ only by swapping adjacent
//! commuting letters), the lexicographically least one.

use std::fmt;

/// A generator or its inverse. Orders as `a < a' < b < b' < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u16,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: u16, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub const fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn symbol(self) -> char {
        letter_symbol(self.gen)
    }
}

pub(crate) fn letter_symbol(gen: u16) -> char {
    char::from(b'a' + gen as u8)
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())?;
        if self.inverse {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// Commutation data of a raag: bit `j` of `masks[i]` is set when generators
/// `i` and `j` commute. An empty mask list is the free group.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Commutation<'a> {
    pub masks: &'a [u32],
}

impl Commutation<'_> {
    #[cfg(test)]
    pub const FREE: Commutation<'static> = Commutation { masks: &[] };

    #[inline]
    fn commute(&self, a: u16, b: u16) -> bool {
        a != b
            && self
                .masks
                .get(a as usize)
                .is_some_and(|m| m & (1 << b) != 0)
    }

    /// Appends `letter` to a reduced word, cancelling against an inverse
    /// letter that can be shuffled to the end of the word.
    pub fn push(&self, word: &mut Vec<Letter>, letter: Letter) {
        for j in (0..word.len()).rev() {
            let w = word[j];
            if w.gen == letter.gen {
                if w == letter.inv() {
                    word.remove(j);
                    return;
                }
                break;
            }
            if !self.commute(w.gen, letter.gen) {
                break;
            }
        }
        word.push(letter);
    }

    /// Lexicographically least shuffle of a reduced word.
    pub fn normalize(&self, word: &[Letter]) -> Vec<Letter> {
        if self.masks.is_empty() {
            return word.to_vec();
        }
        let mut rest: Vec<Letter> = word.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // A letter can move to the front when every earlier letter
            // commutes with it.
            let mut best: Option<usize> = None;
            for (i, &l) in rest.iter().enumerate() {
                if !rest[..i].iter().all(|&p| self.commute(p.gen, l.gen)) {
                    continue;
                }
                if best.is_none_or(|b| l < rest[b]) {
                    best = Some(i);
                }
            }
            let i = best.expect("the first letter is always movable");
            out.push(rest.remove(i));
        }
        out
    }

    pub fn multiply(&self, g: &[Letter], h: &[Letter]) -> Vec<Letter> {
        let mut w = g.to_vec();
        for &l in h {
            self.push(&mut w, l);
        }
        self.normalize(&w)
    }

    pub fn invert(&self, g: &[Letter]) -> Vec<Letter> {
        let w: Vec<Letter> = g.iter().rev().map(|l| l.inv()).collect();
        self.normalize(&w)
    }

    /// Length of the reduced form of `g⁻¹h`, without normalizing.
    pub fn distance(&self, g: &[Letter], h: &[Letter]) -> usize {
        if self.masks.is_empty() {
            let common = g.iter().zip(h).take_while(|(a, b)| a == b).count();
            return g.len() + h.len() - 2 * common;
        }
        let mut w: Vec<Letter> = g.iter().rev().map(|l| l.inv()).collect();
        for &l in h {
            self.push(&mut w, l);
        }
        w.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Letter = Letter::new(0, false);
    const A_: Letter = Letter::new(0, true);
    const B: Letter = Letter::new(1, false);
    const B_: Letter = Letter::new(1, true);
    const C: Letter = Letter::new(2, false);

    // path a - b - c
    const P3: [u32; 3] = [0b010, 0b101, 0b010];

    #[test]
    fn free_reduction() {
        let free = Commutation::FREE;
        assert_eq!(free.multiply(&[A, B], &[B_, A]), vec![A, A]);
        assert_eq!(free.invert(&[A, B_]), vec![B, A_]);
        assert_eq!(free.distance(&[A, B], &[A, B_]), 2);
    }

    #[test]
    fn raag_cancels_across_commuting_letters() {
        let p3 = Commutation { masks: &P3 };
        // a b a' = b since a and b commute
        assert_eq!(p3.multiply(&[A, B], &[A_]), vec![B]);
        // a c a' does not reduce: a and c do not commute
        assert_eq!(p3.multiply(&[A, C], &[A_]).len(), 3);
    }

    #[test]
    fn raag_normal_form_is_lex_least() {
        let p3 = Commutation { masks: &P3 };
        assert_eq!(p3.normalize(&[B, A]), vec![A, B]);
        assert_eq!(p3.normalize(&[C, B]), vec![B, C]);
        assert_eq!(p3.normalize(&[C, A]), vec![C, A]);
        // b commutes with both: c a b -> b c a
        assert_eq!(p3.normalize(&[C, A, B]), vec![B, C, A]);
    }
}
