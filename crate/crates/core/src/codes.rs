//! Doodle codes: crossing count plus face-size spectrum.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diagram::DoodleDiagram;
use crate::error::{malformed, Error, Result};

/// `f[i]` is the number of `i`-gon regions. Entries below index 3 are
/// always zero and the vector has no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoodleCode {
    n: usize,
    f: Vec<usize>,
}

impl DoodleCode {
    /// Builds a code from `(f_3, f_4, ...)`, checking both Euler constraints.
    pub fn new(n: usize, from_three: &[usize]) -> Result<Self> {
        let mut f = vec![0; 3];
        f.extend_from_slice(from_three);
        while f.len() > 3 && f[f.len() - 1] == 0 {
            f.pop();
        }
        let code = Self { n, f };
        let faces: usize = code.f.iter().sum();
        let sides: usize = code.f.iter().enumerate().map(|(i, c)| i * c).sum();
        if faces != n + 2 || sides != 4 * n {
            return Err(malformed("doodle code", alloc::format!("{code} violates the Euler constraints")));
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of `i`-gons.
    pub fn f(&self, i: usize) -> usize {
        self.f.get(i).copied().unwrap_or(0)
    }

    /// Largest region size present.
    pub fn p(&self) -> usize {
        self.f.len() - 1
    }

    /// `(f_3, f_4, ..., f_p)`.
    pub fn counts(&self) -> &[usize] {
        &self.f[3..]
    }

    /// Number of dual vertices (finite regions) of each valency when a
    /// largest region is taken as infinite.
    pub fn finite_valency_spectrum(&self) -> Vec<usize> {
        let mut s = self.f.clone();
        let p = self.p();
        s[p] -= 1;
        s
    }
}

impl fmt::Display for DoodleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, c) in self.counts().iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{c}")?;
        }
        Ok(())
    }
}

impl FromStr for DoodleCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || malformed("doodle code", String::from(s));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let counts = rest
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        DoodleCode::new(n, &counts)
    }
}

/// All codes for `n` crossings, sorted by `(f_3, f_4, ...)`. With
/// `prime_only` every region size `i` satisfies `2i <= n`.
pub fn enumerate_codes(n: usize, prime_only: bool) -> Result<Vec<DoodleCode>> {
    if n < 3 {
        return Err(Error::TooFewCrossings);
    }
    // f_3 + f_p <= n + 2 with f_3 >= 8 + (p - 4) bounds p by n - 3.
    let max_i = if prime_only { n / 2 } else { n.saturating_sub(3).max(4) };
    let mut out = Vec::new();
    if max_i < 3 {
        return Ok(out);
    }
    let mut f = vec![0usize; max_i + 1];
    search(n, 5, max_i, &mut f, &mut out);
    out.sort();
    Ok(out)
}

fn search(n: usize, i: usize, max_i: usize, f: &mut Vec<usize>, out: &mut Vec<DoodleCode>) {
    // Partial sums over i >= 5.
    let excess: usize = (5..i).map(|j| (j - 4) * f[j]).sum();
    let count: usize = (5..i).map(|j| f[j]).sum();
    if i > max_i {
        let f3 = 8 + excess;
        if f3 + count > n + 2 {
            return;
        }
        let f4 = n + 2 - f3 - count;
        if max_i < 4 && f4 != 0 {
            return;
        }
        let mut counts = vec![f3, f4];
        if max_i >= 5 {
            counts.extend_from_slice(&f[5..=max_i]);
        }
        if let Ok(code) = DoodleCode::new(n, &counts) {
            out.push(code);
        }
        return;
    }
    let mut k = 0;
    loop {
        f[i] = k;
        if 8 + excess + (i - 4) * k + count + k > n + 2 {
            break;
        }
        search(n, i + 1, max_i, f, out);
        k += 1;
    }
    f[i] = 0;
}

/// The code of a minimal diagram.
pub fn code_of(d: &DoodleDiagram) -> Result<DoodleCode> {
    if !d.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let hist = d.region_size_histogram();
    DoodleCode::new(d.n(), &hist[3..])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;
    use alloc::string::ToString;

    fn rows(n: usize) -> Vec<Vec<usize>> {
        enumerate_codes(n, true).unwrap().iter().map(|c| c.counts().to_vec()).collect()
    }

    #[test]
    fn prime_code_table() {
        assert_eq!(rows(6), [vec![8]]);
        assert!(rows(7).is_empty());
        assert_eq!(rows(8), [vec![8, 2]]);
        assert_eq!(rows(9), [vec![8, 3]]);
        assert_eq!(rows(10), [vec![8, 4], vec![9, 2, 1], vec![10, 0, 2]]);
        assert_eq!(rows(11), [vec![8, 5], vec![9, 3, 1], vec![10, 1, 2]]);
    }

    #[test]
    fn identity_holds_for_all_codes() {
        for n in 3..=20 {
            for prime in [false, true] {
                for c in enumerate_codes(n, prime).unwrap() {
                    let excess: usize = (5..=c.p()).map(|i| (i - 4) * c.f(i)).sum();
                    assert_eq!(c.f(3), 8 + excess, "{c}");
                    if prime {
                        assert!(2 * c.p() <= n);
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_agrees() {
        for n in 3..=16usize {
            let max_i = n / 2;
            let mut expect = Vec::new();
            // f_i <= 4n / i bounds every coordinate.
            let dims: Vec<usize> = (3..=max_i).map(|i| 4 * n / i + 1).collect();
            let total: usize = dims.iter().product();
            for mut idx in 0..total {
                let mut counts = Vec::new();
                for &d in &dims {
                    counts.push(idx % d);
                    idx /= d;
                }
                if let Ok(c) = DoodleCode::new(n, &counts) {
                    if c.f(3) >= 8 {
                        expect.push(c);
                    }
                }
            }
            expect.sort();
            expect.dedup();
            assert_eq!(enumerate_codes(n, true).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn text_form() {
        let c = code_of(&known::poppy()).unwrap();
        assert_eq!(c.to_string(), "8: 8,2");
        assert_eq!("8: 8,2".parse::<DoodleCode>().unwrap(), c);
        assert_eq!(code_of(&known::borromean()).unwrap().to_string(), "6: 8");
        assert!("6: 7".parse::<DoodleCode>().is_err());
    }

    #[test]
    fn non_minimal_rejected() {
        assert_eq!(code_of(&known::kink()), Err(Error::NotMinimal));
        assert_eq!(enumerate_codes(2, true), Err(Error::TooFewCrossings));
    }
}
