use std::ops::ControlFlow;

use crate::alternating::Matching;
use crate::error::Result;
use crate::graph::{EdgeId, Graph};
use crate::oracle;

/// Calls `visit` on every perfect matching of `g` (as edge ids in the order they
/// were picked). The search always extends the lowest uncovered vertex along its
/// incident edges in index order, so the visiting order is deterministic and
/// each edge set is produced exactly once.
pub fn visit_perfect_matchings<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    oracle::ensure_default("perfect matching enumeration", g.n())?;
    if g.n() % 2 == 1 {
        return Ok(());
    }
    let mut covered = vec![false; g.n()];
    let mut chosen = Vec::with_capacity(g.n() / 2);
    let _ = rec(g, &mut covered, &mut chosen, 0, &mut visit);
    Ok(())
}

fn rec<F>(
    g: &Graph,
    covered: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    from: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let Some(v) = (from..g.n()).find(|&v| !covered[v]) else {
        return visit(chosen);
    };
    covered[v] = true;
    for &(x, id) in g.incident(v) {
        if covered[x] {
            continue;
        }
        covered[x] = true;
        chosen.push(id);
        let flow = rec(g, covered, chosen, v + 1, visit);
        chosen.pop();
        covered[x] = false;
        flow?;
    }
    covered[v] = false;
    ControlFlow::Continue(())
}

/// All perfect matchings of `g`, at most `limit` of them, in the deterministic
/// order of [`visit_perfect_matchings`]. Refuses graphs above the oracle bound.
pub fn enumerate_perfect_matchings(g: &Graph, limit: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    if limit == 0 {
        oracle::ensure_default("perfect matching enumeration", g.n())?;
        return Ok(out);
    }
    visit_perfect_matchings(g, |ids| {
        out.push(Matching::from_ids_unchecked(ids.to_vec()));
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}
