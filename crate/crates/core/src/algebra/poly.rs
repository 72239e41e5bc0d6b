//! Just enough univariate polynomial arithmetic over GF(p) to test
//! irreducibility. Coefficients are stored low degree first.

use crate::field::FieldSpec;

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(f: FieldSpec, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let m = trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = f.inv(m[dm]);
    while a.len() > dm {
        let top = a.len() - 1;
        let c = f.mul(a[top], lead_inv);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            a[shift + i] = f.sub(a[shift + i], f.mul(c, mi));
        }
        a = trim(a);
    }
    a
}

fn mul(f: FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

fn mulmod(f: FieldSpec, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(f, &mul(f, a, b), m)
}

fn powmod(f: FieldSpec, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn gcd(f: FieldSpec, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or test: `poly` of degree n is irreducible iff
/// `gcd(x^(p^i) - x, poly) = 1` for all `1 <= i <= n/2`.
pub fn is_irreducible(f: FieldSpec, poly: &[u32]) -> bool {
    let poly = trim(poly.to_vec());
    if poly.len() < 2 {
        return false;
    }
    let n = poly.len() - 1;
    if n == 1 {
        return true;
    }
    let p = f.characteristic() as u64;
    let x = vec![0u32, 1];
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = powmod(f, &h, p, &poly);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = f.sub(diff[1], 1);
        let g = gcd(f, &trim(diff), &poly);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_irreducibility_matches_root_search() {
        let f = FieldSpec::new(7).unwrap();
        for a in 0..7u32 {
            for b in 0..7u32 {
                let poly = [b, a, 1];
                let has_root = (0..7u32).any(|t| (t * t + a * t + b) % 7 == 0);
                assert_eq!(is_irreducible(f, &poly), !has_root, "x^2 + {a}x + {b}");
            }
        }
    }

    #[test]
    fn quartic_product_of_quadratics_is_reducible() {
        let f = FieldSpec::new(3).unwrap();
        // (x^2 + 1)^2 = x^4 + 2x^2 + 1 has no roots mod 3 but is reducible
        assert!(!is_irreducible(f, &[1, 0, 2, 0, 1]));
        // x^4 + x + 2 is irreducible over GF(3)
        assert!(is_irreducible(f, &[2, 1, 0, 0, 1]));
    }
}
