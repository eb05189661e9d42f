//! Heuristic multivariate gcd over the integers.
//!
//! Variables are eliminated one at a time by evaluation at a large integer,
//! and the gcd of the images is lifted back by balanced base-ξ expansion.
//! Every candidate is verified by exact division, so a returned gcd is always
//! a true common divisor; `None` means the heuristic gave up.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Mono, Poly, MAX_VARS, ONE_MONO};
use super::Rational;

type IPoly = BTreeMap<Mono, BigInt>;

const MAX_TRIES: usize = 6;

fn content(p: &IPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.values() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn div_int(p: &IPoly, c: &BigInt) -> IPoly {
    p.iter().map(|(m, v)| (*m, v / c)).collect()
}

fn max_norm(p: &IPoly) -> BigInt {
    p.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn main_var(f: &IPoly, g: &IPoly) -> Option<usize> {
    (0..MAX_VARS).find(|&i| f.keys().chain(g.keys()).any(|m| m[i] > 0))
}

fn eval_var(p: &IPoly, var: usize, x: &BigInt) -> IPoly {
    let mut out: IPoly = BTreeMap::new();
    for (m, c) in p {
        let mut k = *m;
        let e = k[var];
        k[var] = 0;
        let v = c * num_traits::pow(x.clone(), e as usize);
        let slot = out.entry(k).or_insert_with(BigInt::zero);
        *slot += v;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn smod(a: &BigInt, x: &BigInt) -> BigInt {
    let r = a.mod_floor(x);
    if &r * 2 > *x {
        r - x
    } else {
        r
    }
}

/// Lift an image polynomial (in the remaining variables) back to a polynomial
/// in `var` using balanced base-`x` digits.
fn interpolate(h: &IPoly, var: usize, x: &BigInt) -> IPoly {
    let mut out: IPoly = BTreeMap::new();
    let mut cur = h.clone();
    let mut i: u16 = 0;
    while !cur.is_empty() {
        let mut next: IPoly = BTreeMap::new();
        for (m, c) in &cur {
            let d = smod(c, x);
            if !d.is_zero() {
                let mut k = *m;
                k[var] = i;
                out.insert(k, d.clone());
            }
            let q = (c - d) / x;
            if !q.is_zero() {
                next.insert(*m, q);
            }
        }
        cur = next;
        i += 1;
        if i > 4096 {
            break;
        }
    }
    out
}

fn to_poly(p: &IPoly) -> Poly {
    Poly::from_integer_parts(p)
}

fn primitive(p: &IPoly) -> IPoly {
    let c = content(p);
    if c.is_zero() {
        return p.clone();
    }
    let mut q = div_int(p, &c);
    if q.iter().next_back().is_some_and(|(_, c)| c.is_negative()) {
        q = q.into_iter().map(|(m, c)| (m, -c)).collect();
    }
    q
}

fn divides(d: &IPoly, f: &IPoly) -> Option<IPoly> {
    let q = to_poly(f).div_exact(&to_poly(d))?;
    let parts = q.integer_parts();
    if q.terms().all(|(_, c)| c.is_integer()) {
        Some(parts)
    } else {
        None
    }
}

/// Gcd of two primitive integer polynomials. Result has positive leading
/// coefficient.
fn heu_gcd(f: &IPoly, g: &IPoly, depth: usize) -> Option<IPoly> {
    if f.is_empty() {
        return Some(primitive(g));
    }
    if g.is_empty() {
        return Some(primitive(f));
    }
    let cf = content(f);
    let cg = content(g);
    let c = cf.gcd(&cg);
    let f = div_int(f, &cf);
    let g = div_int(g, &cg);
    let var = match main_var(&f, &g) {
        None => {
            let mut out = BTreeMap::new();
            out.insert(ONE_MONO, c);
            return Some(out);
        }
        Some(v) => v,
    };
    if depth > MAX_VARS {
        return None;
    }
    let fn_ = max_norm(&f);
    let gn = max_norm(&g);
    let b: BigInt = std::cmp::min(&fn_, &gn).clone() * 2 + 29;
    let mut x = std::cmp::max(std::cmp::min(b.clone(), b.sqrt() * 99), BigInt::from(2));
    for _ in 0..MAX_TRIES {
        let ff = eval_var(&f, var, &x);
        let gg = eval_var(&g, var, &x);
        if !ff.is_empty() && !gg.is_empty() {
            if let Some(h) = heu_gcd(&ff, &gg, depth + 1) {
                let cand = primitive(&interpolate(&h, var, &x));
                if !cand.is_empty()
                    && divides(&cand, &f).is_some() && divides(&cand, &g).is_some() {
                        return Some(scale_i(&cand, &c));
                    }
                // cofactor route
                if let Some(cff) = divides_image(&ff, &h) {
                    let cf_l = interpolate(&cff, var, &x);
                    if let Some(h2) = divides(&primitive(&cf_l), &f) {
                        let h2 = primitive(&h2);
                        if divides(&h2, &g).is_some() {
                            return Some(scale_i(&h2, &c));
                        }
                    }
                }
                if let Some(cfg) = divides_image(&gg, &h) {
                    let cg_l = interpolate(&cfg, var, &x);
                    if let Some(h2) = divides(&primitive(&cg_l), &g) {
                        let h2 = primitive(&h2);
                        if divides(&h2, &f).is_some() {
                            return Some(scale_i(&h2, &c));
                        }
                    }
                }
            }
        }
        x = &x * 73794 * x.sqrt().sqrt() / 27011;
    }
    None
}

fn divides_image(f: &IPoly, h: &IPoly) -> Option<IPoly> {
    divides(h, f)
}

fn scale_i(p: &IPoly, c: &BigInt) -> IPoly {
    p.iter().map(|(m, v)| (*m, v * c)).collect()
}

/// Monic-free gcd of two rational polynomials (positive leading coefficient,
/// integer primitive). Falls back to `1` when the heuristic fails.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return Poly::from_int(1);
    }
    let fi = primitive(&f.integer_parts());
    let gi = primitive(&g.integer_parts());
    match heu_gcd(&fi, &gi, 0) {
        Some(h) => {
            let h = primitive(&h);
            if h.is_empty() {
                Poly::from_int(1)
            } else {
                to_poly(&h)
            }
        }
        None => Poly::from_int(1),
    }
}

/// Leading coefficient under the lexicographic term order.
pub fn lead_coeff(p: &Poly) -> Rational {
    p.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
}
