//! Named small lattices used throughout tests, examples and the CLI.

use crate::lattice::Lattice;

/// The `n`-element chain `0 < m1 < … < 1` (`n ≥ 1`).  `chain(2)` is the
/// two-element lattice, `chain(3)` is `0 < m < 1`.
pub fn chain(n: usize) -> Lattice {
    assert!(n >= 1);
    let labels: Vec<String> = match n {
        1 => vec!["0".into()],
        2 => vec!["0".into(), "1".into()],
        3 => vec!["0".into(), "m".into(), "1".into()],
        _ => std::iter::once("0".to_string())
            .chain((1..n - 1).map(|i| format!("m{i}")))
            .chain(std::iter::once("1".to_string()))
            .collect(),
    };
    let name = match n {
        2 => "TWO".to_string(),
        _ => format!("C{n}"),
    };
    Lattice::from_leq(name, labels, |x, y| x <= y).expect("chains are lattices")
}

/// `M_k`: bottom, `k` pairwise incomparable atoms, top.  Atoms are labelled
/// `a, b, c, …`.  `diamond(2)` is the four-element Boolean lattice.
pub fn diamond(atoms: usize) -> Lattice {
    let mut labels = vec!["0".to_string()];
    labels.extend((0..atoms).map(|i| ((b'a' + i as u8) as char).to_string()));
    labels.push("1".into());
    let top = atoms + 1;
    let name = if atoms == 2 {
        "B4".to_string()
    } else {
        format!("M{atoms}")
    };
    Lattice::from_leq(name, labels, |x, y| x == y || x == 0 || y == top).expect("M_k is a lattice")
}

/// The four-element Boolean lattice `{0, a, b, 1}`.
pub fn boolean_square() -> Lattice {
    diamond(2)
}

/// The pentagon `N5`: `0 < a < c < 1`, `0 < b < 1`.
pub fn pentagon() -> Lattice {
    Lattice::from_covers(
        "N5",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .expect("N5 is a lattice")
}

/// The eight-element Boolean lattice `2³`.
pub fn boolean_cube() -> Lattice {
    let labels = ["0", "a", "b", "c", "ab", "ac", "bc", "1"];
    let masks = [0u8, 1, 2, 4, 3, 5, 6, 7];
    Lattice::from_leq(
        "B8",
        labels.iter().map(|s| s.to_string()).collect(),
        |x, y| masks[x] & !masks[y] == 0,
    )
    .expect("2^3 is a lattice")
}

/// Look up a fixture by name: `TWO`, `C<n>`, `B4`, `M<k>`, `N5`, `B8`.
pub fn by_name(name: &str) -> Option<Lattice> {
    match name {
        "TWO" => Some(chain(2)),
        "B4" => Some(boolean_square()),
        "N5" => Some(pentagon()),
        "B8" => Some(boolean_cube()),
        _ => {
            let (kind, rest) = name.split_at(1.min(name.len()));
            let k: usize = rest.parse().ok()?;
            match kind {
                "C" if (1..=12).contains(&k) => Some(chain(k)),
                "M" if (1..=10).contains(&k) => Some(diamond(k)),
                _ => None,
            }
        }
    }
}
