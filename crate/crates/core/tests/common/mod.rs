//! Independent oracles for the integration and acceptance tests. None of
//! these call into the code path they are used to check.

#![allow(dead_code, clippy::too_many_arguments, clippy::needless_range_loop)]

use std::collections::HashMap;

use attainable_core::QuadForm;

/// `p(n)` for `0 <= n <= max` via Euler's pentagonal-number recurrence.
pub fn partition_numbers(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += sign * p[n - g2];
            }
        }
        p[n] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Number of partitions of `m` into triangular numbers, by recursion over
/// the largest allowed triangular value.
pub fn triangular_partition_count(m: u64) -> u64 {
    fn count(rest: u64, max_value: u64, memo: &mut HashMap<(u64, u64), u64>) -> u64 {
        if rest == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(rest, max_value)) {
            return v;
        }
        let mut total = 0;
        let mut i = 1;
        while i * (i + 1) / 2 <= max_value.min(rest) {
            let t = i * (i + 1) / 2;
            total += count(rest - t, t, memo);
            i += 1;
        }
        memo.insert((rest, max_value), total);
        total
    }
    count(m, m, &mut HashMap::new())
}

/// Brute-force parts list for cyclicity index, used to cross-check formulas.
pub fn cyclicity(parts: &[u64]) -> i64 {
    parts.iter().enumerate().map(|(i, &n)| (3 - 2 * (i as i64 + 1)) * n as i64).sum()
}

/// Counts automorphisms of `Z/p^{e_1} x ... x Z/p^{e_r}` by exhaustive search
/// over generator images. A choice `g_1, ..., g_r` with `p^{e_i} g_i = 0`
/// defines an endomorphism; it is injective on `<e_1, ..., e_k>` exactly when
/// `|<g_1, ..., g_k>| = p^{e_1 + ... + e_k}`, which prunes the search. The
/// count below a node depends only on the subgroup generated so far, so it is
/// memoized on that subgroup.
pub fn brute_force_aut_count(p: u64, exps: &[u32]) -> u64 {
    let moduli: Vec<u64> = exps.iter().map(|&e| p.pow(e)).collect();
    let size: u64 = moduli.iter().product();
    assert!(size <= 128, "bitset subgroups hold at most 128 elements");
    let size = size as usize;

    let decode = |mut x: usize| -> Vec<u64> {
        moduli
            .iter()
            .map(|&m| {
                let d = x as u64 % m;
                x /= m as usize;
                d
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize {
        let mut x = 0u64;
        for (d, m) in v.iter().zip(&moduli).rev() {
            x = x * m + d;
        }
        x as usize
    };
    let mut add = vec![vec![0usize; size]; size];
    for (x, row) in add.iter_mut().enumerate() {
        let vx = decode(x);
        for (y, cell) in row.iter_mut().enumerate() {
            let vy = decode(y);
            let s: Vec<u64> = vx.iter().zip(&vy).zip(&moduli).map(|((a, b), m)| (a + b) % m).collect();
            *cell = encode(&s);
        }
    }
    let scale = |x: usize, k: u64| -> usize {
        let mut acc = 0usize;
        for _ in 0..k {
            acc = add[acc][x];
        }
        acc
    };

    fn recurse(
        level: usize,
        subgroup: u128,
        exps: &[u32],
        p: u64,
        size: usize,
        add: &[Vec<usize>],
        scale: &dyn Fn(usize, u64) -> usize,
        memo: &mut HashMap<(usize, u128), u64>,
    ) -> u64 {
        if level == exps.len() {
            return 1;
        }
        if let Some(&v) = memo.get(&(level, subgroup)) {
            return v;
        }
        let order = p.pow(exps[level]);
        let target = subgroup.count_ones() as u64 * order;
        let mut total = 0;
        for g in 0..size {
            if scale(g, order) != 0 {
                continue;
            }
            // <H, g> = H + {0, g, 2g, ...}
            let mut grown = 0u128;
            let mut multiple = 0usize;
            for _ in 0..order {
                for h in 0..size {
                    if subgroup >> h & 1 == 1 {
                        grown |= 1u128 << add[h][multiple];
                    }
                }
                multiple = add[multiple][g];
            }
            if grown.count_ones() as u64 == target {
                total += recurse(level + 1, grown, exps, p, size, add, scale, memo);
            }
        }
        memo.insert((level, subgroup), total);
        total
    }

    recurse(0, 1, exps, p, size, &add, &scale, &mut HashMap::new())
}

/// Kronecker symbol `(d / n)` for `n >= 1`.
pub fn kronecker(d: i64, mut n: u64) -> i64 {
    let mut result = 1i64;
    while n.is_multiple_of(2) {
        n /= 2;
        match d.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => return 0,
        }
    }
    // Jacobi symbol (d mod n / n) for odd n
    let mut a = d.rem_euclid(n as i64) as u64;
    let mut m = n;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            result = -result;
        }
        a %= m;
    }
    if m == 1 {
        result
    } else {
        0
    }
}

/// `h(D) = -(1/|D|) sum_{a=1}^{|D|-1} (D/a) a` for fundamental `D < -4`.
pub fn dirichlet_class_number(d: i64) -> u64 {
    assert!(d < -4);
    let n = d.unsigned_abs();
    let s: i64 = (1..n).map(|a| kronecker(d, a) * a as i64).sum();
    assert_eq!(s % n as i64, 0);
    (-s / n as i64) as u64
}

/// The order of each class, by repeated composition.
pub fn element_orders(forms: &[QuadForm]) -> Vec<u64> {
    forms
        .iter()
        .map(|f| {
            let mut g = *f;
            let mut k = 1u64;
            while g.a != 1 {
                g = g.compose(f).unwrap();
                k += 1;
            }
            k
        })
        .collect()
}

/// Recovers the `q`-Sylow partition by matching element-order statistics
/// against every partition `μ` of `e` (with `q^e || h`): in
/// `Z/q^{μ_1} x ...` exactly `q^{sum_i min(μ_i, k)}` elements satisfy
/// `q^k x = 0`. Returns the unique matching `μ`, largest part first.
pub fn sylow_by_order_statistics(orders: &[u64], q: u64, e: u32) -> Vec<u64> {
    let q_part_orders: Vec<u64> = orders
        .iter()
        .map(|&o| {
            let mut o = o;
            let mut qo = 1;
            while o % q == 0 {
                o /= q;
                qo *= q;
            }
            qo
        })
        .collect();
    let h = orders.len() as u64;
    let cofactor = h / q.pow(e);
    let observed: Vec<u64> =
        (1..=e).map(|k| q_part_orders.iter().filter(|&&o| q.pow(k) % o == 0).count() as u64 / cofactor).collect();

    let mut matches = Vec::new();
    let mut stack = vec![(e as u64, e as u64, Vec::<u64>::new())];
    while let Some((rest, max, parts)) = stack.pop() {
        if rest == 0 {
            let predicted: Vec<u64> =
                (1..=e as u64).map(|k| q.pow(parts.iter().map(|&m| m.min(k)).sum::<u64>() as u32)).collect();
            if predicted == observed {
                matches.push(parts);
            }
            continue;
        }
        for first in 1..=max.min(rest) {
            let mut next = parts.clone();
            next.push(first);
            stack.push((rest - first, first, next));
        }
    }
    assert_eq!(matches.len(), 1, "order statistics determine the Sylow subgroup");
    matches.pop().unwrap()
}
