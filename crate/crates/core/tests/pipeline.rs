use std::collections::HashSet;

use mil::bundled;
use mil::{Problem, ProblemSpec};

/// Invariant dimension of a permutation action: the number of monomial orbits of degree d.
fn monomial_orbits(n: usize, perms: &[Vec<usize>], d: u32) -> usize {
    fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
        if n == 1 {
            return vec![vec![d]];
        }
        (0..=d)
            .flat_map(|e| monomials(n - 1, d - e).into_iter().map(move |mut m| {
                m.insert(0, e);
                m
            }))
            .collect()
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut orbits = 0;
    for m in monomials(n, d) {
        if seen.contains(&m) {
            continue;
        }
        orbits += 1;
        let mut stack = vec![m];
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur.clone()) {
                continue;
            }
            for p in perms {
                let mut next = vec![0; n];
                for (i, &e) in cur.iter().enumerate() {
                    next[p[i]] = e;
                }
                stack.push(next);
            }
        }
    }
    orbits
}

/// `#{b >= 1 : sum b_i d_i = m}`, the top cohomology of a weighted polynomial ring in degree -m.
fn positive_compositions(degrees: &[u32], m: i64) -> usize {
    match degrees.split_first() {
        None => usize::from(m == 0),
        Some((&d, rest)) => (1..).map(|b| b * d as i64).take_while(|&s| s <= m).map(|s| positive_compositions(rest, m - s)).sum(),
    }
}

fn permutation_problem(char_p: u32, n: usize, perms: &[Vec<usize>]) -> Problem {
    let vars: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mats: Vec<Vec<Vec<String>>> = perms
        .iter()
        .map(|p| (0..n).map(|i| (0..n).map(|j| if p[i] == j { "1" } else { "0" }.to_string()).collect()).collect())
        .collect();
    let spec = serde_json::json!({"name": "perm", "field": {"char": char_p}, "variables": vars, "generators": mats});
    Problem::from_json(&spec.to_string()).unwrap()
}

#[test]
fn invariant_dims_match_monomial_orbits() {
    let cases: Vec<(u32, usize, Vec<Vec<usize>>)> = vec![
        (3, 2, vec![vec![1, 0]]),
        (2, 2, vec![vec![1, 0]]),
        (3, 3, vec![vec![1, 2, 0]]),
        (2, 3, vec![vec![1, 0, 2], vec![1, 2, 0]]),
        (5, 4, vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
    ];
    for (p, n, perms) in cases {
        let problem = permutation_problem(p, n, &perms);
        let dims: Vec<usize> = problem.action.invariant_spaces(0..=5).unwrap().iter().map(|s| s.dimension()).collect();
        let oracle: Vec<usize> = (0..=5).map(|d| monomial_orbits(n, &perms, d)).collect();
        assert_eq!(dims, oracle, "char {p}, perms {perms:?}");
    }
}

#[test]
fn polynomial_invariant_rings_have_composition_ranks() {
    for (id, degrees) in [("s2", vec![1, 2]), ("diag_reflection", vec![4, 1])] {
        let lc = bundled::problem(id).unwrap().local_cohomology().unwrap();
        for k in -10..=-1 {
            let r = lc.strand_report(k).unwrap();
            assert_eq!(r.rank_h, Some(positive_compositions(&degrees, -k)), "{id} k={k}");
        }
        let top = (-30..0).rev().find(|&k| positive_compositions(&degrees, -k) > 0).unwrap();
        assert_eq!(lc.a_invariant(None).unwrap(), top, "{id}");
    }
}

#[test]
fn inequality_and_rank_bounds() {
    for &(id, _) in bundled::BATTERY {
        let p = bundled::problem(id).unwrap();
        let a = mil::report::a_invariant(&p, None).unwrap().a_invariant.unwrap().value.unwrap();
        assert!(a <= -(p.n() as i64), "{id}");
        let lc = p.local_cohomology().unwrap();
        for k in (-(p.n() as i64) - 2)..=-1 {
            let r = lc.strand_report(k).unwrap();
            if let Some(h) = r.rank_h {
                assert!(h <= r.rank_fixed && r.rank_fixed <= r.dim_v, "{id} k={k}");
            }
        }
    }
}

#[test]
fn parallel_table_matches_sequential_reports() {
    let lc = bundled::problem("a3").unwrap().local_cohomology().unwrap();
    let table = lc.hilbert_of_h(-9..=-1).unwrap();
    let again = lc.hilbert_of_h(-9..=-1).unwrap();
    assert_eq!(table.rows, again.rows);
    let degrees: Vec<i64> = table.rows.iter().map(|r| r.degree).collect();
    assert_eq!(degrees, (-9..=-1).rev().collect::<Vec<_>>());
    for row in &table.rows {
        assert_eq!(*row, lc.strand_report(row.degree).unwrap());
    }
    for (row, omega) in table.rows.iter().zip(&table.omega) {
        assert_eq!(omega.degree, -row.degree);
        assert_eq!(omega.rank, row.rank_h);
    }
}

#[test]
fn bundled_specs_round_trip() {
    for id in bundled::problem_ids() {
        let spec = ProblemSpec::from_json(bundled::source(id).unwrap()).unwrap();
        assert_eq!(ProblemSpec::from_json(&spec.to_json()).unwrap(), spec, "{id}");
        spec.load().unwrap();
    }
}

#[test]
fn orbit_products_are_invariant() {
    let p = bundled::problem("braun").unwrap();
    for f in ["x", "y", "x + y"] {
        let op = p.action.orbit_product(&p.poly(f).unwrap()).unwrap();
        assert!(p.action.is_invariant(&op).unwrap(), "{f}");
    }
}
