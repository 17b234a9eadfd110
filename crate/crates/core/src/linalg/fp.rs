/// Entries of `F_p` stored reduced in `0..p`.
pub type Fp = u64;

/// Inverse modulo a prime.
pub fn inv_mod(a: Fp, p: Fp) -> Fp {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible mod {p}");
    t0.rem_euclid(p as i128) as Fp
}

/// Reduced row echelon form in place; zero rows are dropped. Returns pivot columns.
pub fn rref(m: &mut Vec<Vec<Fp>>, p: Fp) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, k);
        let s = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    pivots
}

pub fn rank(m: &[Vec<Fp>], p: Fp) -> usize {
    let mut a = m.to_vec();
    rref(&mut a, p).len()
}

/// Basis of `{x : m x = 0}` for an `r × cols` matrix.
pub fn kernel(m: &[Vec<Fp>], cols: usize, p: Fp) -> Vec<Vec<Fp>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; cols];
            v[f] = 1;
            for (row, &pc) in a.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse() {
        for p in [2, 3, 5, 7, 13] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = vec![vec![1, 2, 0, 1], vec![2, 4, 1, 0], vec![0, 0, 1, 3]];
        let p = 5;
        let k = kernel(&m, 4, p);
        assert_eq!(k.len() + rank(&m, p), 4);
        for v in &k {
            for row in &m {
                assert_eq!(row.iter().zip(v).map(|(a, b)| a * b).sum::<u64>() % p, 0);
            }
        }
    }
}
