use crate::graph::CoTree;

/// mh of the cograph described by `t`. Joins fold left with
/// mh(A ⋈ B) = min(mh(A) + |B|, |A| + mh(B)).
pub fn cograph_mh(t: &CoTree) -> usize {
    value_and_size(t).0
}

fn value_and_size(t: &CoTree) -> (usize, usize) {
    match t {
        CoTree::Leaf(_) => (0, 1),
        CoTree::Union(ch) => ch.iter().map(value_and_size).fold((0, 0), |(m, n), (cm, cn)| (m.max(cm), n + cn)),
        CoTree::Join(ch) => {
            let mut parts = ch.iter().map(value_and_size);
            let first = parts.next().expect("join has children");
            parts.fold(first, |(a, na), (b, nb)| ((a + nb).min(na + b), na + nb))
        }
    }
}
