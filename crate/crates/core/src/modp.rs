//! Arithmetic over `Z/pZ` for primes below `2^63`.

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
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

/// Inverse of a nonzero element.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// Deterministic Miller–Rabin for all `n < 2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Whether `2^i != 1 (mod p)` for every `1 <= i <= bound`.
pub fn order_of_two_exceeds(p: u64, bound: u64) -> bool {
    let mut x = 1u64;
    for _ in 0..bound {
        x = mul(x, 2, p);
        if x == 1 {
            return false;
        }
    }
    true
}

/// Determinant by Gaussian elimination; `a` is consumed as scratch.
pub fn determinant(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            a.swap(piv, col);
            det = sub(0, det, p);
        }
        det = mul(det, a[col][col], p);
        let iv = inv(a[col][col], p);
        for r in col + 1..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mul(a[r][col], iv, p);
            for c in col..n {
                let t = mul(f, a[col][c], p);
                a[r][c] = sub(a[r][c], t, p);
            }
        }
    }
    det
}

/// Pfaffian of a skew-symmetric matrix by congruence elimination; `a` is
/// consumed as scratch.
pub fn pfaffian(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    if n % 2 == 1 {
        return 0;
    }
    // adds c * (row/col j) to row/col i; keeps the Pfaffian
    fn combine(a: &mut [Vec<u64>], i: usize, j: usize, c: u64, p: u64) {
        let n = a.len();
        for x in 0..n {
            let t = mul(c, a[j][x], p);
            a[i][x] = add(a[i][x], t, p);
        }
        for x in 0..n {
            let t = mul(c, a[x][j], p);
            a[x][i] = add(a[x][i], t, p);
        }
    }
    let mut pf = 1u64;
    for k in (0..n).step_by(2) {
        let Some(j) = (k + 1..n).find(|&j| a[k][j] != 0) else {
            return 0;
        };
        if j != k + 1 {
            a.swap(j, k + 1);
            for row in a.iter_mut() {
                row.swap(j, k + 1);
            }
            pf = sub(0, pf, p);
        }
        let piv = a[k][k + 1];
        pf = mul(pf, piv, p);
        let iv = inv(piv, p);
        for i in k + 2..n {
            if a[k][i] != 0 {
                let c = sub(0, mul(a[k][i], iv, p), p);
                combine(&mut a, i, k + 1, c, p);
            }
            if a[k + 1][i] != 0 {
                // a[k+1][k] = -piv
                let c = mul(a[k + 1][i], iv, p);
                combine(&mut a, i, k, c, p);
            }
        }
    }
    pf
}

/// Coefficients (lowest degree first) of the polynomial of degree below
/// `xs.len()` through the points `(xs[i], ys[i])`; the `xs` must be distinct.
pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coeffs = vec![0u64; n];
    for i in 0..n {
        // basis polynomial prod_{j != i} (y - x_j), built up incrementally
        let mut basis = vec![1u64];
        let mut denom = 1u64;
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (d, &b) in basis.iter().enumerate() {
                next[d + 1] = add(next[d + 1], b, p);
                next[d] = sub(next[d], mul(b, xs[j], p), p);
            }
            basis = next;
            denom = mul(denom, sub(xs[i], xs[j], p), p);
        }
        let scale = mul(ys[i], inv(denom, p), p);
        for (d, &b) in basis.iter().enumerate() {
            coeffs[d] = add(coeffs[d], mul(b, scale, p), p);
        }
    }
    coeffs
}
