//! Arithmetic in the prime field F_p on machine words.

/// Default characteristic when neither a flag nor `GREENFORGE_PRIME` says otherwise.
pub const DEFAULT_PRIME: u64 = 101;

/// Largest accepted characteristic; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Reads `GREENFORGE_PRIME`, falling back to [`DEFAULT_PRIME`].
pub fn default_prime() -> u64 {
    std::env::var("GREENFORGE_PRIME")
        .ok()
        .and_then(|s| s.trim().parse::<u64>().ok())
        .filter(|&p| is_prime(p) && p <= MAX_PRIME)
        .unwrap_or(DEFAULT_PRIME)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Multiplicative inverse; panics on zero.
pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in F_{p}");
    pow(a, p - 2, p)
}

/// Reduces a signed integer into `[0, p)`.
pub fn from_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Symmetric representative in `(-p/2, p/2]`, used for display.
pub fn to_i64(v: u64, p: u64) -> i64 {
    if v > p / 2 {
        v as i64 - p as i64
    } else {
        v as i64
    }
}
