//! Automorphisms of `E = Q[x]/(p)` found numerically and verified exactly.
//!
//! Every automorphism sends `x` to a root `z` of `p` in `E`. Writing
//! `z = Σ c_k x^k` and evaluating at all complex embeddings gives a
//! Vandermonde system whose right-hand side is a permutation of the roots.
//! Candidates with near-rational solutions are rounded by continued fractions
//! and kept only when `p(z) = 0` holds exactly in `E`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::NumberField;
use crate::algebra::check_multiplicative;
use crate::error::{Error, Result};
use crate::linear::{Matrix, Rational, Subspace, Vector};

pub const DEFAULT_PRECISION_BITS: u32 = 256;

/// First working precision; doubled until the configured cap.
const START_BITS: u32 = 96;

/// An automorphism `x ↦ z`; column `k` of `matrix` is `z^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldAutomorphism {
    pub image_of_x: Vector,
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct AutomorphismSearch {
    pub automorphisms: Vec<FieldAutomorphism>,
    /// Working precision at which the search settled.
    pub precision_bits: u32,
    /// No near-rational candidate failed exact verification.
    pub complete: bool,
}

pub fn automorphisms(field: &NumberField) -> Result<AutomorphismSearch> {
    automorphisms_with_precision(field, DEFAULT_PRECISION_BITS)
}

pub fn automorphisms_with_precision(field: &NumberField, cap_bits: u32) -> Result<AutomorphismSearch> {
    let n = field.degree();
    if n == 1 {
        return Ok(AutomorphismSearch {
            automorphisms: vec![automorphism_of(field, field.power(1))],
            precision_bits: 0,
            complete: true,
        });
    }
    let coeffs: Vec<f64> = field.min_poly().coeffs().iter().map(Rational::to_f64).collect();
    let seeds = durand_kerner(&coeffs);
    let mut bits = START_BITS.min(cap_bits).max(16);
    loop {
        let outcome = search_at(field, &seeds, bits)?;
        let divides = n % outcome.0.len().max(1) == 0;
        if !outcome.1 && divides {
            return Ok(AutomorphismSearch {
                automorphisms: outcome.0,
                precision_bits: bits,
                complete: true,
            });
        }
        if bits >= cap_bits {
            return Err(Error::PrecisionExhausted { bits });
        }
        bits = (bits * 2).min(cap_bits);
    }
}

fn automorphism_of(field: &NumberField, z: Vector) -> FieldAutomorphism {
    let n = field.degree();
    let cols: Vec<Vector> = (0..n as u32).map(|k| field.algebra().pow(&z, k)).collect();
    FieldAutomorphism {
        image_of_x: z,
        matrix: Matrix::from_columns(&cols, n),
    }
}

/// Verified automorphisms and whether some plausible candidate failed.
fn search_at(field: &NumberField, seeds: &[Complex64], bits: u32) -> Result<(Vec<FieldAutomorphism>, bool)> {
    let n = field.degree();
    let ctx = Fixed { bits };
    let poly: Vec<Cx> = field.min_poly().coeffs().iter().map(|c| ctx.from_rational(c)).collect();
    let roots: Vec<Cx> = seeds
        .iter()
        .map(|s| ctx.newton(&poly, ctx.from_f64(*s)))
        .collect::<Option<_>>()
        .ok_or(Error::PrecisionExhausted { bits })?;
    let vander: Vec<Vec<Cx>> = roots
        .iter()
        .map(|r| {
            let mut row = vec![ctx.one()];
            for k in 1..n {
                row.push(ctx.mul(&row[k - 1], r));
            }
            row
        })
        .collect();
    let inv = ctx.invert(vander).ok_or(Error::PrecisionExhausted { bits })?;

    let tol_bits = bits / 2;
    let den_bound = BigInt::one() << (bits / 4) as usize;
    let mut found: Vec<FieldAutomorphism> = Vec::new();
    let mut seen_targets = BTreeSet::new();
    let mut suspicious = false;
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        if seen_targets.contains(&p[0]) {
            return;
        }
        let mut z = Vec::with_capacity(n);
        for row in &inv {
            let mut acc = ctx.zero();
            for (a, &j) in row.iter().zip(p.iter()) {
                acc = ctx.add(&acc, &ctx.mul(a, &roots[j]));
            }
            if !ctx.is_small(&acc.im, tol_bits) {
                return;
            }
            match ctx.round_rational(&acc.re, &den_bound, tol_bits) {
                Some(c) => z.push(c),
                None => return,
            }
        }
        if is_root(field, &z) {
            seen_targets.insert(p[0]);
            if !found.iter().any(|a| a.image_of_x == z) {
                found.push(automorphism_of(field, z));
            }
        } else {
            suspicious = true;
        }
    });
    found.sort_by(|a, b| a.image_of_x.cmp(&b.image_of_x).reverse());
    if let Some(pos) = found.iter().position(|a| a.image_of_x == field.power(1)) {
        let id = found.remove(pos);
        found.insert(0, id);
    }
    Ok((found, suspicious))
}

fn is_root(field: &NumberField, z: &[Rational]) -> bool {
    let alg = field.algebra();
    let mut acc = vec![Rational::zero(); field.degree()];
    for c in field.min_poly().coeffs().iter().rev() {
        acc = alg.mul(&acc, z);
        acc[0] += c;
    }
    acc.iter().all(Rational::is_zero)
}

/// Exact confirmation that the listed maps are distinct, linearly
/// independent algebra automorphisms.
pub fn verify_automorphisms(field: &NumberField, autos: &[FieldAutomorphism]) -> std::result::Result<(), String> {
    let alg = field.algebra();
    for (i, a) in autos.iter().enumerate() {
        if !is_root(field, &a.image_of_x) {
            return Err(format!("automorphism {i}: p(z) ≠ 0"));
        }
        check_multiplicative(&a.matrix, alg, alg, false).map_err(|w| format!("automorphism {i}: {w}"))?;
        if a.matrix.mul_vec(alg.unit()) != *alg.unit() {
            return Err(format!("automorphism {i}: not unital"));
        }
    }
    let span = Subspace::span(
        field.degree() * field.degree(),
        autos.iter().map(|a| a.matrix.entries().to_vec()),
    );
    if span.dim() != autos.len() {
        return Err("automorphisms are not linearly independent".into());
    }
    Ok(())
}

fn permutations(p: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        visit(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, visit);
        p.swap(k, i);
    }
}

/// Simultaneous root iteration for a monic polynomial given low-to-high.
fn durand_kerner(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let eval = |z: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius.min(2.0)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Complex number in fixed point, scaled by `2^bits`.
#[derive(Clone, Debug)]
struct Cx {
    re: BigInt,
    im: BigInt,
}

struct Fixed {
    bits: u32,
}

impl Fixed {
    fn zero(&self) -> Cx {
        Cx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn one(&self) -> Cx {
        Cx {
            re: BigInt::one() << self.bits as usize,
            im: BigInt::zero(),
        }
    }

    fn from_rational(&self, q: &Rational) -> Cx {
        Cx {
            re: (q.numer() << self.bits as usize).div_floor(&q.denom()),
            im: BigInt::zero(),
        }
    }

    fn from_f64(&self, z: Complex64) -> Cx {
        let conv = |x: f64| -> BigInt {
            let scaled = (x * (1u64 << 52) as f64).round() as i128;
            let v = BigInt::from(scaled);
            if self.bits >= 52 {
                v << (self.bits - 52) as usize
            } else {
                v >> (52 - self.bits) as usize
            }
        };
        Cx {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    fn add(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn sub(&self, a: &Cx, b: &Cx) -> Cx {
        Cx {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    fn mul(&self, a: &Cx, b: &Cx) -> Cx {
        let s = self.bits as usize;
        Cx {
            re: (&a.re * &b.re - &a.im * &b.im) >> s,
            im: (&a.re * &b.im + &a.im * &b.re) >> s,
        }
    }

    fn div(&self, a: &Cx, b: &Cx) -> Option<Cx> {
        let norm = &b.re * &b.re + &b.im * &b.im;
        if norm.is_zero() {
            return None;
        }
        let s = self.bits as usize;
        let re = (&a.re * &b.re + &a.im * &b.im) << s;
        let im = (&a.im * &b.re - &a.re * &b.im) << s;
        Some(Cx {
            re: re.div_floor(&norm),
            im: im.div_floor(&norm),
        })
    }

    /// `|x| < 2^{-k}` for a scaled real `x`.
    fn is_small(&self, x: &BigInt, k: u32) -> bool {
        k < self.bits && x.abs() < (BigInt::one() << (self.bits - k) as usize)
    }

    fn newton(&self, poly: &[Cx], mut z: Cx) -> Option<Cx> {
        let deriv: Vec<Cx> = poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Cx {
                re: &c.re * k,
                im: &c.im * k,
            })
            .collect();
        let eval = |coeffs: &[Cx], z: &Cx| {
            coeffs
                .iter()
                .rev()
                .fold(self.zero(), |acc, c| self.add(&self.mul(&acc, z), c))
        };
        for _ in 0..200 {
            let step = self.div(&eval(poly, &z), &eval(&deriv, &z))?;
            z = self.sub(&z, &step);
            if self.is_small(&step.re, self.bits - 8) && self.is_small(&step.im, self.bits - 8) {
                return Some(z);
            }
        }
        None
    }

    /// Gauss–Jordan inverse with partial pivoting by magnitude.
    fn invert(&self, mut m: Vec<Vec<Cx>>) -> Option<Vec<Vec<Cx>>> {
        let n = m.len();
        let mut inv: Vec<Vec<Cx>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.one() } else { self.zero() }).collect())
            .collect();
        let mag = |c: &Cx| &c.re * &c.re + &c.im * &c.im;
        for col in 0..n {
            let piv = (col..n).max_by(|&a, &b| mag(&m[a][col]).cmp(&mag(&m[b][col])))?;
            if mag(&m[piv][col]).is_zero() {
                return None;
            }
            m.swap(col, piv);
            inv.swap(col, piv);
            let p = m[col][col].clone();
            for j in 0..n {
                m[col][j] = self.div(&m[col][j], &p)?;
                inv[col][j] = self.div(&inv[col][j], &p)?;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = m[r][col].clone();
                if f.re.is_zero() && f.im.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let a = self.mul(&f, &m[col][j]);
                    m[r][j] = self.sub(&m[r][j], &a);
                    let b = self.mul(&f, &inv[col][j]);
                    inv[r][j] = self.sub(&inv[r][j], &b);
                }
            }
        }
        Some(inv)
    }

    /// Best continued-fraction approximation with denominator at most
    /// `bound`, accepted only within `2^{-tol_bits}`.
    fn round_rational(&self, x: &BigInt, bound: &BigInt, tol_bits: u32) -> Option<Rational> {
        let scale = BigInt::one() << self.bits as usize;
        let (mut num, mut den) = (x.clone(), scale.clone());
        let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
        let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
        let mut best: Option<(BigInt, BigInt)> = None;
        while !den.is_zero() {
            let (a, r) = num.div_mod_floor(&den);
            let h2 = &a * &h1 + &h0;
            let k2 = &a * &k1 + &k0;
            if &k2 > bound {
                break;
            }
            best = Some((h2.clone(), k2.clone()));
            h0 = std::mem::replace(&mut h1, h2);
            k0 = std::mem::replace(&mut k1, k2);
            num = std::mem::replace(&mut den, r);
        }
        let (h, k) = best?;
        // |x/2^bits − h/k| < 2^{-tol}  ⇔  |x·k − h·2^bits| · 2^tol < k·2^bits
        let err = (x * &k - &h * &scale).abs() << tol_bits as usize;
        (err < &k * &scale).then(|| Rational::from_bigints(h, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::qi;

    fn images(p: &str) -> Vec<Vector> {
        let e = NumberField::parse(p).unwrap();
        let s = automorphisms(&e).unwrap();
        verify_automorphisms(&e, &s.automorphisms).unwrap();
        s.automorphisms.into_iter().map(|a| a.image_of_x).collect()
    }

    #[test]
    fn quadratic_and_quartic_fields() {
        assert_eq!(images("x^2-2"), vec![vec![qi(0), qi(1)], vec![qi(0), qi(-1)]]);
        assert_eq!(images("x^2+1"), vec![vec![qi(0), qi(1)], vec![qi(0), qi(-1)]]);
        assert_eq!(
            images("x^4-2"),
            vec![vec![qi(0), qi(1), qi(0), qi(0)], vec![qi(0), qi(-1), qi(0), qi(0)]]
        );
        assert_eq!(images("x^3-2").len(), 1);
        assert_eq!(images("x-3"), vec![vec![qi(3)]]);
    }

    #[test]
    fn cyclotomic_fields_are_galois() {
        // Q(ζ5) and Q(ζ7)^+ style examples with nontrivial rational images
        assert_eq!(images("x^4+x^3+x^2+x+1").len(), 4);
        assert_eq!(images("x^3-3x+1").len(), 3);
        assert_eq!(images("x^4-10x^2+1").len(), 4);
        assert_eq!(images("x^6+x^5+x^4+x^3+x^2+x+1").len(), 6);
    }

    #[test]
    fn low_cap_is_sound() {
        let e = NumberField::parse("x^4-10x^2+1").unwrap();
        match automorphisms_with_precision(&e, 16) {
            Ok(s) => verify_automorphisms(&e, &s.automorphisms).unwrap(),
            Err(err) => assert!(matches!(err, Error::PrecisionExhausted { .. })),
        }
    }
}
