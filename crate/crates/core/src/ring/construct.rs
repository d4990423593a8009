use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::FiniteRing;
use crate::error::{Error, Result};

/// Default bound on the number of elements of a constructed ring.
pub const DEFAULT_SIZE_CAP: usize = 256;

impl FiniteRing {
    /// `Z/nZ`, element `i` being the residue of `i`.
    pub fn zmod(n: usize) -> Result<Self> {
        Self::zmod_capped(n, DEFAULT_SIZE_CAP)
    }

    pub fn zmod_capped(n: usize, cap: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("Z/{n} is not allowed, need n >= 2")));
        }
        if n > cap {
            return Err(Error::TooLarge { what: "ring", size: n, cap });
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push(((x + y) % n) as u32);
                mul.push(((x * y) % n) as u32);
            }
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::from_tables(format!("Z/{n}"), names, add, mul, 0, 1)
    }

    /// Componentwise ring on the cartesian product. Element indices are
    /// mixed-radix with the first factor most significant.
    pub fn product(factors: &[FiniteRing]) -> Result<Self> {
        Self::product_capped(factors, DEFAULT_SIZE_CAP)
    }

    pub fn product_capped(factors: &[FiniteRing], cap: usize) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("product of no factors".into()));
        }
        let size = factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.len()).filter(|&s| s <= cap))
            .ok_or_else(|| Error::TooLarge {
                what: "ring",
                size: factors.iter().map(|f| f.len()).fold(1usize, usize::saturating_mul),
                cap,
            })?;

        let decode = |mut idx: usize| -> Vec<usize> {
            let mut coords = alloc::vec![0; factors.len()];
            for (k, f) in factors.iter().enumerate().rev() {
                coords[k] = idx % f.len();
                idx /= f.len();
            }
            coords
        };
        let encode =
            |coords: &[usize]| -> usize { coords.iter().zip(factors).fold(0, |acc, (&c, f)| acc * f.len() + c) };

        let tuples: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        let mut buf = alloc::vec![0; factors.len()];
        for x in &tuples {
            for y in &tuples {
                for (k, f) in factors.iter().enumerate() {
                    buf[k] = f.add(x[k], y[k]);
                }
                add.push(encode(&buf) as u32);
                for (k, f) in factors.iter().enumerate() {
                    buf[k] = f.mul(x[k], y[k]);
                }
                mul.push(encode(&buf) as u32);
            }
        }
        let names = tuples
            .iter()
            .map(|t| {
                let parts: Vec<&str> = t.iter().zip(factors).map(|(&c, f)| f.element_name(c)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let zero = encode(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
        let one = encode(&factors.iter().map(|f| f.one()).collect::<Vec<_>>());
        let label = factors.iter().map(|f| f.label()).collect::<Vec<_>>().join(" x ");
        Self::from_tables(label, names, add, mul, zero, one)
    }

    /// `(Z/p)[x] / (f)` for a prime `p` and a monic `f` given low-to-high.
    ///
    /// Coefficients are reduced mod `p` and trailing zeros dropped before the
    /// monic check. Element index `i` is the polynomial whose coefficients are
    /// the base-`p` digits of `i`, least significant first.
    pub fn poly_quotient(p: u64, modulus: &[i64]) -> Result<Self> {
        Self::poly_quotient_capped(p, modulus, DEFAULT_SIZE_CAP)
    }

    pub fn poly_quotient_capped(p: u64, modulus: &[i64], cap: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let pi = p as i64;
        let mut f: Vec<u64> = modulus.iter().map(|&c| c.rem_euclid(pi) as u64).collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        if f.len() < 2 {
            return Err(Error::InvalidParameter("modulus must have degree >= 1 after reduction".into()));
        }
        if f.last() != Some(&1) {
            return Err(Error::InvalidParameter("modulus is not monic".into()));
        }
        let d = f.len() - 1;
        let size = (0..d)
            .try_fold(1usize, |acc, _| acc.checked_mul(p as usize).filter(|&s| s <= cap))
            .ok_or(Error::TooLarge { what: "ring", size: usize::MAX, cap })?;

        let p_us = p as usize;
        let digits = |mut idx: usize| -> Vec<u64> {
            (0..d)
                .map(|_| {
                    let c = (idx % p_us) as u64;
                    idx /= p_us;
                    c
                })
                .collect()
        };
        let encode = |coeffs: &[u64]| -> usize { coeffs.iter().rev().fold(0, |acc, &c| acc * p_us + c as usize) };

        let polys: Vec<Vec<u64>> = (0..size).map(digits).collect();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &polys {
            for b in &polys {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(encode(&sum) as u32);
                mul.push(encode(&poly_mul_mod(a, b, &f, p)) as u32);
            }
        }
        let names = polys.iter().map(|c| poly_name(c)).collect();
        let label = format!("F{p}[x]/({})", poly_name(&f));
        Self::from_tables(label, names, add, mul, 0, 1)
    }
}

fn poly_mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = alloc::vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // f is monic: x^d = -(f_0 + ... + f_{d-1} x^{d-1}).
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &fi) in f[..d].iter().enumerate() {
            let idx = k - d + i;
            prod[idx] = (prod[idx] + c * (p - fi % p)) % p;
        }
    }
    prod.truncate(d);
    prod
}

fn poly_name(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && deg > 0 { String::new() } else { c.to_string() };
        terms.push(match deg {
            0 => c.to_string(),
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{deg}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
