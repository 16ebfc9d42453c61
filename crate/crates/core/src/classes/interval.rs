use crate::error::{Error, Result};
use crate::graph::{recognize_interval, Graph};

/// mh of an interval graph: ω - 1 when every maximum clique has a
/// simplicial vertex, ω otherwise.
pub fn interval_mh(g: &Graph) -> Result<usize> {
    let cliques = recognize_interval(g)?.ok_or(Error::NotInterval)?;
    let omega = cliques.iter().map(|c| c.len()).max().unwrap_or(0);
    let all_have_simplicial = cliques
        .iter()
        .filter(|c| c.len() == omega)
        .all(|c| c.iter().any(|v| g.is_simplicial(v)));
    Ok(if all_have_simplicial { omega - 1 } else { omega })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::solver::monotone_hunter_number;

    #[test]
    fn examples() {
        for n in 4..=8 {
            let p = named::path(n);
            assert_eq!(interval_mh(&p).unwrap(), 2);
            assert_eq!(monotone_hunter_number(&p, &p.vertices()).unwrap().value, 2);
        }
        assert_eq!(interval_mh(&named::path(3)).unwrap(), 1);
        for n in 2..6 {
            assert_eq!(interval_mh(&named::complete(n)).unwrap(), n - 1);
        }
        assert_eq!(interval_mh(&named::star(4)).unwrap(), 1);
        assert_eq!(interval_mh(&Graph::new(1)).unwrap(), 0);
        assert_eq!(interval_mh(&named::cycle(4)), Err(Error::NotInterval));
    }
}
