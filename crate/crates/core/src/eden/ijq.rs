use num_bigint::BigUint;
use num_traits::Zero;

/// Pascal's triangle in arbitrary precision, rows `0..=max_row`.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<BigUint>>,
}

impl BinomialTable {
    pub fn new(max_row: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_row + 1);
        rows.push(vec![BigUint::from(1u32)]);
        for m in 1..=max_row {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::from(1u32));
            for l in 1..m {
                row.push(&prev[l - 1] + &prev[l]);
            }
            row.push(BigUint::from(1u32));
            rows.push(row);
        }
        BinomialTable { rows }
    }

    /// `C(m, l)`, zero when `l < 0` or `l > m`.
    pub fn get(&self, m: usize, l: i64) -> BigUint {
        if l < 0 || l as usize > m {
            return BigUint::zero();
        }
        self.rows[m][l as usize].clone()
    }
}

/// Upper bound on lexmin-rooted site animals of size `n` whose Eden tree
/// has at most `q` turns:
///
/// `sum_{i=1..d} sum_{j=0..min(q, n-i)} C(d,i) C((2d-1)(n-1), j) C(n-1, n-i-j)`.
pub fn ijq_upper_bound(dim: usize, n: usize, q: usize) -> BigUint {
    assert!(dim >= 1 && n >= 1, "ijq bound needs d >= 1 and n >= 1");
    let wide = (2 * dim - 1) * (n - 1);
    let table = BinomialTable::new(wide.max(dim).max(n));
    let mut total = BigUint::zero();
    for i in 1..=dim {
        let outer = table.get(dim, i as i64);
        let top = n as i64 - i as i64;
        let j_max = (q as i64).min(top);
        for j in 0..=j_max {
            let term = table.get(wide, j) * table.get(n - 1, top - j);
            total += &outer * term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    #[test]
    fn pascal_matches_closed_form() {
        let t = BinomialTable::new(40);
        for m in 0..=40u64 {
            for l in 0..=m {
                assert_eq!(t.get(m as usize, l as i64), BigUint::from(binomial(m, l)));
            }
            assert!(t.get(m as usize, -1).is_zero());
            assert!(t.get(m as usize, m as i64 + 1).is_zero());
        }
    }

    #[test]
    fn hand_evaluated_values() {
        // i=1: 2*(C(3,0)C(1,1) + C(3,1)C(1,0)) = 8; i=2: C(3,0)C(1,0) = 1
        assert_eq!(ijq_upper_bound(2, 2, 3), BigUint::from(9u32));
        assert_eq!(ijq_upper_bound(1, 1, 0), BigUint::from(1u32));
        assert_eq!(ijq_upper_bound(1, 1, 7), BigUint::from(1u32));
    }

    #[test]
    fn nondecreasing_in_q() {
        for dim in 1..=4 {
            for n in 1..=8 {
                let mut prev = BigUint::zero();
                for q in 0..=2 * n {
                    let cur = ijq_upper_bound(dim, n, q);
                    assert!(cur >= prev);
                    prev = cur;
                }
            }
        }
    }
}
