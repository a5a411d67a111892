use num_integer::Integer;

use super::ConstructionError;

/// The `u x (u+v)` column-index array and block-label array that drive
/// the block map.
///
/// Row `j` of the index array is `0, 1, …, u-1` followed by the `v`
/// residues `<jv>_u, …, <(j+1)v-1>_u` (the set `A_j`). The label at
/// `(j, k)` is `j` when `k ∉ A_j`, and `u + ⌊(jv + <k-jv>_u) / u⌋` when
/// `k ∈ A_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMatrices {
    pub u: usize,
    pub v: usize,
    pub index: Vec<Vec<usize>>,
    pub label: Vec<Vec<usize>>,
}

impl LabelMatrices {
    /// Whether column position `k` lies in `A_j`.
    pub fn in_window(&self, j: usize, k: usize) -> bool {
        let (u, v) = (self.u, self.v);
        // A_j is v consecutive residues starting at <jv>_u.
        k < u && (k + u - (j * v) % u) % u < v
    }
}

/// `u` by `d(u+v)` arrays obtained by widening each index cell `a` into
/// `d·a, d·a+1, …, d·a+d-1` and repeating each label `d` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedLabels {
    pub d: usize,
    pub h1: usize,
    pub h2: usize,
    pub index: Vec<Vec<usize>>,
    pub label: Vec<Vec<usize>>,
}

pub fn label_matrices(u: usize, v: usize) -> Result<LabelMatrices, ConstructionError> {
    if u == 0 || v == 0 {
        return Err(ConstructionError::Parameters(format!(
            "label matrices need positive u and v, got u={u} v={v}"
        )));
    }
    if v > u {
        return Err(ConstructionError::Parameters(format!(
            "label matrices need v <= u, got u={u} v={v}"
        )));
    }
    if u.gcd(&v) != 1 {
        return Err(ConstructionError::Parameters(format!(
            "label matrices need gcd(u,v) = 1, got u={u} v={v}"
        )));
    }

    let mut index = Vec::with_capacity(u);
    let mut label = Vec::with_capacity(u);
    for j in 0..u {
        let mut a_row: Vec<usize> = (0..u).collect();
        a_row.extend((j * v..(j + 1) * v).map(|x| x % u));

        let window: Vec<usize> = a_row[u..].to_vec();
        let b_row = (0..u + v)
            .map(|k| {
                if window.contains(&k) {
                    let offset = (k + u - (j * v) % u) % u;
                    u + (j * v + offset) / u
                } else {
                    j
                }
            })
            .collect();
        index.push(a_row);
        label.push(b_row);
    }
    Ok(LabelMatrices { u, v, index, label })
}

pub fn expand_labels(l: &LabelMatrices, d: usize) -> Result<ExpandedLabels, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::Parameters(
            "expansion factor d must be at least 1".into(),
        ));
    }
    let index = l
        .index
        .iter()
        .map(|row| {
            row.iter()
                .flat_map(|&a| (0..d).map(move |i| d * a + i))
                .collect()
        })
        .collect();
    let label = l
        .label
        .iter()
        .map(|row| {
            row.iter()
                .flat_map(|&b| std::iter::repeat_n(b, d))
                .collect()
        })
        .collect();
    Ok(ExpandedLabels {
        d,
        h1: l.u,
        h2: l.v,
        index,
        label,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u3_v2() {
        let l = label_matrices(3, 2).unwrap();
        assert_eq!(
            l.index,
            vec![
                vec![0, 1, 2, 0, 1],
                vec![0, 1, 2, 2, 0],
                vec![0, 1, 2, 1, 2]
            ]
        );
        assert_eq!(
            l.label,
            vec![
                vec![3, 3, 0, 0, 0],
                vec![4, 1, 3, 1, 1],
                vec![2, 4, 4, 2, 2]
            ]
        );
    }

    #[test]
    fn u1_v1_degenerate() {
        let l = label_matrices(1, 1).unwrap();
        assert_eq!(l.index, vec![vec![0, 0]]);
        assert_eq!(l.label, vec![vec![1, 0]]);
    }

    #[test]
    fn u2_v1() {
        let l = label_matrices(2, 1).unwrap();
        assert_eq!(l.index, vec![vec![0, 1, 0], vec![0, 1, 1]]);
        assert_eq!(l.label, vec![vec![2, 0, 0], vec![1, 2, 1]]);
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(label_matrices(4, 2).is_err());
        assert!(label_matrices(2, 3).is_err());
        assert!(label_matrices(0, 1).is_err());
        assert!(label_matrices(2, 2).is_err());
    }

    #[test]
    fn window_membership_matches_index_row() {
        for u in 1..=9 {
            for v in (1..=u).filter(|v| u.gcd(v) == 1) {
                let l = label_matrices(u, v).unwrap();
                for j in 0..u {
                    for k in 0..u + v {
                        assert_eq!(l.in_window(j, k), l.index[j][u..].contains(&k));
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_by_two_of_u3_v2() {
        let e = expand_labels(&label_matrices(3, 2).unwrap(), 2).unwrap();
        assert_eq!(
            e.index,
            vec![
                vec![0, 1, 2, 3, 4, 5, 0, 1, 2, 3],
                vec![0, 1, 2, 3, 4, 5, 4, 5, 0, 1],
                vec![0, 1, 2, 3, 4, 5, 2, 3, 4, 5],
            ]
        );
        assert_eq!(
            e.label,
            vec![
                vec![3, 3, 3, 3, 0, 0, 0, 0, 0, 0],
                vec![4, 4, 1, 1, 3, 3, 1, 1, 1, 1],
                vec![2, 2, 4, 4, 4, 4, 2, 2, 2, 2],
            ]
        );
    }

    #[test]
    fn expansion_identity_and_by_three() {
        let l = label_matrices(3, 2).unwrap();
        let e = expand_labels(&l, 1).unwrap();
        assert_eq!((e.index, e.label), (l.index.clone(), l.label.clone()));

        let e = expand_labels(&label_matrices(2, 1).unwrap(), 3).unwrap();
        assert_eq!(e.index.len(), 2);
        assert_eq!(e.index[0], vec![0, 1, 2, 3, 4, 5, 0, 1, 2]);
        assert!(e.label.iter().all(|r| r.len() == 9));
        assert!(expand_labels(&l, 0).is_err());
    }
}
