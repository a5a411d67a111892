use super::{check_size, require_valid, ConstructionError};
use crate::pda::{Entry, PdaArray};

/// `C(n, k)` in 128-bit arithmetic; `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

fn binomial_or_overflow(n: u64, k: u64) -> Result<u128, ConstructionError> {
    binomial(n, k).ok_or_else(|| ConstructionError::Overflow(format!("C({n},{k})")))
}

/// Advances `c` to the next `c.len()`-subset of `[0, n)` in lexicographic
/// order. Returns false after the last one.
fn next_subset(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    let Some(i) = (0..r).rev().find(|&i| c[i] < n - r + i) else {
        return false;
    };
    c[i] += 1;
    for x in i + 1..r {
        c[x] = c[x - 1] + 1;
    }
    true
}

/// Lexicographic rank of a sorted subset among all subsets of `[0, n)` of
/// the same size, using a precomputed binomial table.
fn lex_rank(c: &[usize], n: usize, binom: &[Vec<u128>]) -> u128 {
    let r = c.len();
    let mut rank = 0;
    let mut lo = 0;
    for (i, &ci) in c.iter().enumerate() {
        for x in lo..ci {
            rank += binom[n - 1 - x][r - 1 - i];
        }
        lo = ci + 1;
    }
    rank
}

/// The MN placement delivery array for `K` users and cache parameter `t`.
///
/// Rows are the `t`-subsets of the users in lexicographic order. Entry
/// `(T, k)` is a star when `k` is in `T`, and otherwise the lexicographic
/// rank of `T ∪ {k}` among the `(t+1)`-subsets. The result is a
/// `(K, C(K,t), C(K-1,t-1), C(K,t+1))` PDA.
pub fn mn_pda(k: usize, t: usize) -> Result<PdaArray, ConstructionError> {
    if t == 0 || t >= k {
        return Err(ConstructionError::Parameters(format!(
            "MN array needs 1 <= t < K, got K={k} t={t}"
        )));
    }
    let (k64, t64) = (k as u64, t as u64);
    let f = binomial_or_overflow(k64, t64)?;
    let z = binomial_or_overflow(k64 - 1, t64 - 1)?;
    let s = binomial_or_overflow(k64, t64 + 1)?;
    check_size(f, k as u128)?;
    check_size(k as u128 + 1, t as u128 + 2)?;

    // Entries that overflow are never summed: every term of a rank is below S.
    let binom: Vec<Vec<u128>> = (0..=k)
        .map(|n| {
            (0..=t + 1)
                .map(|r| binomial(n as u64, r as u64).unwrap_or(u128::MAX))
                .collect()
        })
        .collect();

    let mut cells = Vec::with_capacity(f as usize * k);
    let mut subset: Vec<usize> = (0..t).collect();
    let mut extended = Vec::with_capacity(t + 1);
    loop {
        for user in 0..k {
            if subset.contains(&user) {
                cells.push(Entry::Star);
            } else {
                extended.clear();
                extended.extend_from_slice(&subset);
                let at = extended.partition_point(|&x| x < user);
                extended.insert(at, user);
                cells.push(Entry::Int(lex_rank(&extended, k, &binom) as usize));
            }
        }
        if !next_subset(&mut subset, k) {
            break;
        }
    }

    let p = PdaArray::from_cells(f as usize, k, cells, z as usize, s as usize)?;
    require_valid(&p, ConstructionError::InvalidOutput)?;
    Ok(p)
}
