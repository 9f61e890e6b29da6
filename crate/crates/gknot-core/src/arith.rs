//! Integer and residue arithmetic.

use alloc::vec::Vec;

/// Non-negative gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Extended Euclid: returns `(g, x, y)` with `a x + b y = g = gcd(a, b) ≥ 0`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (r0, s0, t0) = (-r0, -s0, -t0);
    }
    (r0 as i64, s0 as i64, t0 as i64)
}

/// Least non-negative residue of `a` modulo `n > 0`.
pub fn modn(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

/// `a * b mod n` without overflow.
pub fn mul_mod(a: i64, b: i64, n: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(n as i128)) as i64
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn inv_mod(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let (g, x, _) = egcd(modn(a, n), n);
    (g == 1).then(|| modn(x, n))
}

/// `a^e mod n` for `e ≥ 0`.
pub fn pow_mod(a: i64, mut e: u64, n: i64) -> i64 {
    let mut base = modn(a, n);
    let mut acc = modn(1, n);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        e >>= 1;
    }
    acc
}

/// Order of `k` in the additive group `Z/n`: `n / gcd(k mod n, n)`.
pub fn additive_order(k: i64, n: i64) -> i64 {
    assert!(n >= 1, "additive_order needs n >= 1");
    n / gcd(modn(k, n), n)
}

/// Least non-negative `x` with `x ≡ a mod m` and `x ≡ b mod n`, if one exists.
pub fn crt(a: i64, m: i64, b: i64, n: i64) -> Option<i64> {
    let (g, p, _) = egcd(m, n);
    let diff = b - a;
    if diff % g != 0 {
        return None;
    }
    let l = (m / g) as i128 * n as i128;
    let t = (diff / g) as i128 * p as i128 % (n / g) as i128;
    let x = (a as i128 + m as i128 * t).rem_euclid(l);
    Some(x as i64)
}

/// Distinct prime divisors of `n ≥ 1`, ascending.
pub fn prime_divisors(mut n: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
