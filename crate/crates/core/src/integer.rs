//! Integer number theory backing square-class reduction and the choice of
//! places for Hasse invariants: primality, factorization, coprime bases.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial division bound.
pub const TRIAL_DIVISION_LIMIT: u32 = 1_000_000;

/// Pollard-Brent gives up after this many iterations per split attempt.
const RHO_ITERATION_CAP: u64 = 1 << 22;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_DIVISION_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::with_capacity(80_000);
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES[..12] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin with the first thirteen prime bases. Deterministic below
/// 3.3e24, a probable-prime test above.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Square root of `n` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

fn rho_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
    let (mut x, mut ys) = (0u64, 0u64);
    let m = 128;
    let mut steps = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..m.min(r - k) {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += m;
        }
        r *= 2;
        steps += r;
        if steps > RHO_ITERATION_CAP {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let one = BigUint::one();
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let (mut y, mut r, mut q, mut g) = (BigUint::from(2u32), 1u64, one.clone(), one.clone());
    let (mut x, mut ys) = (BigUint::zero(), BigUint::zero());
    let m = 128;
    let mut steps = 0u64;
    while g == one {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == one {
            ys = y.clone();
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += m;
        }
        r *= 2;
        steps += r;
        if steps > RHO_ITERATION_CAP {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Find a nontrivial divisor of a composite `n` with no prime factor below
/// the trial-division bound.
fn split(n: &BigUint) -> Option<BigUint> {
    for c in 1..8u64 {
        let d = match n.to_u64() {
            Some(small) => rho_u64(small, c).map(BigUint::from),
            None => rho_big(n, c),
        };
        if d.is_some() {
            return d;
        }
    }
    None
}

/// Factor a cofactor all of whose prime factors exceed the trial-division
/// bound, pushing `(prime, exponent * multiplier)` pairs.
fn factor_large(n: BigUint, multiplier: u32, out: &mut Vec<(BigUint, u32)>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    let limit = BigUint::from(TRIAL_DIVISION_LIMIT);
    if n < &limit * &limit || is_probable_prime(&n) {
        out.push((n, multiplier));
        return Ok(());
    }
    // perfect powers q^k with q > limit, so k < log(n)/log(limit)
    let max_k = (n.bits() as f64 / (TRIAL_DIVISION_LIMIT as f64).log2()).floor() as u32;
    for k in (2..=max_k).rev() {
        let root = n.nth_root(k);
        if root.pow(k) == n {
            return factor_large(root, multiplier * k, out);
        }
    }
    match split(&n) {
        Some(d) => {
            let other = &n / &d;
            factor_large(d, multiplier, out)?;
            factor_large(other, multiplier, out)
        }
        None => Err(Error::Uncertified(n.to_string())),
    }
}

/// Strip all primes up to the trial-division bound from `n`, returning the
/// small-prime part and the cofactor. Stops early once the cofactor is
/// certified prime.
fn trial_divide(n: &BigUint) -> (Vec<(BigUint, u32)>, BigUint) {
    let mut out = Vec::new();
    let mut m = n.clone();
    for (idx, &p) in small_primes().iter().enumerate() {
        if m.is_one() {
            break;
        }
        let p_big = BigUint::from(p);
        if &p_big * &p_big > m {
            out.push((m, 1));
            return (out, BigUint::one());
        }
        let mut e = 0;
        loop {
            let (q, r) = m.div_rem(&p_big);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((p_big, e));
        }
        // periodic probable-prime exit; a prime cofactor needs no more division
        if (idx == 200 || (e > 0 && idx > 200)) && !m.is_one() && is_probable_prime(&m) {
            out.push((m, 1));
            return (out, BigUint::one());
        }
    }
    (out, m)
}

fn merge(mut factors: Vec<(BigUint, u32)>) -> Vec<(BigUint, u32)> {
    factors.sort();
    let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(factors.len());
    for (p, e) in factors {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    merged
}

/// Prime factorization of a positive integer, ascending by prime.
pub fn factorize(n: &BigUint) -> Result<Vec<(BigUint, u32)>> {
    if n.is_zero() {
        return Err(Error::domain("cannot factor zero"));
    }
    let (mut factors, cofactor) = trial_divide(n);
    factor_large(cofactor, 1, &mut factors)?;
    Ok(merge(factors))
}

/// Squarefree kernel: the product of primes dividing `n` to an odd power.
pub fn squarefree_part(n: &BigUint) -> Result<BigUint> {
    Ok(factorize(n)?
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p))
}

/// Refine a list of positive integers into pairwise coprime factors whose
/// products recover every input.
pub fn coprime_base(values: &[BigUint]) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = Vec::new();
    for v in values.iter().filter(|v| !v.is_zero() && !v.is_one()) {
        let mut pending = vec![v.clone()];
        while let Some(mut x) = pending.pop() {
            let mut i = 0;
            while i < base.len() && !x.is_one() {
                let g = x.gcd(&base[i]);
                if g.is_one() {
                    i += 1;
                    continue;
                }
                let b = base.swap_remove(i);
                let b_rest = &b / &g;
                x = &x / &g;
                pending.push(g);
                if !b_rest.is_one() {
                    pending.push(b_rest);
                }
                i = 0;
            }
            if !x.is_one() && !base.contains(&x) {
                base.push(x);
            }
        }
    }
    base.sort();
    base
}

/// All primes dividing at least one of `values`, ascending.
///
/// Small primes come off by trial division; the large cofactors are split
/// against each other by a coprime base before any rho attempt, which keeps
/// products of unrelated large primes cheap.
pub fn prime_support(values: &[BigUint]) -> Result<Vec<BigUint>> {
    let mut primes = Vec::new();
    let mut cofactors = Vec::new();
    for v in values.iter().filter(|v| !v.is_zero()) {
        let (small, rest) = trial_divide(v);
        primes.extend(small.into_iter().map(|(p, _)| p));
        cofactors.push(rest);
    }
    for b in coprime_base(&cofactors) {
        let mut large = Vec::new();
        factor_large(b, 1, &mut large)?;
        primes.extend(large.into_iter().map(|(p, _)| p));
    }
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// p-adic valuation of a nonzero integer and its unit part.
pub fn split_valuation(n: &BigInt, p: &BigUint) -> (u32, BigInt) {
    let p = BigInt::from_biguint(Sign::Plus, p.clone());
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        m = q;
        v += 1;
    }
    (v, m)
}
