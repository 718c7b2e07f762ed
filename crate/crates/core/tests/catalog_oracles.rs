use embedcheck::catalog::{h1_of_surgery, linking_matrix, serialize_catalog, load_catalog_str, shipped_catalog, shipped_entry, EntryKind};
use embedcheck::crowell::infinite_cyclic_cover_homology;
use embedcheck::presentation::{cokernel_of_rows, parse_presentation};
use embedcheck::{GroupPresentation, Word};
use embedcheck_algebra::{LaurentPid, Rationals};

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a·b)(i) = a(b(i)), matching left-to-right word products acting on the left.
    b.iter().map(|&i| a[i as usize]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn eval(w: &Word, images: &[Perm], n: usize) -> Perm {
    let mut acc: Perm = (0..n as u8).collect();
    for &(g, e) in w.letters() {
        let base = if e > 0 { images[g].clone() } else { inverse(&images[g]) };
        for _ in 0..e.unsigned_abs() {
            acc = compose(&acc, &base);
        }
    }
    acc
}

fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Perm = (0..n as u8).collect();
    fn rec(k: usize, p: &mut Perm, out: &mut Vec<Perm>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One permutation per cycle type.
fn class_representatives(n: usize) -> Vec<Perm> {
    fn parts(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in (1..=max.min(n)).rev() {
            for mut rest in parts(n - k, k) {
                rest.insert(0, k);
                out.push(rest);
            }
        }
        out
    }
    parts(n, n)
        .into_iter()
        .map(|cycles| {
            let mut p: Perm = (0..n as u8).collect();
            let mut start = 0;
            for len in cycles {
                for i in 0..len {
                    p[start + i] = (start + (i + 1) % len) as u8;
                }
                start += len;
            }
            p
        })
        .collect()
}

/// Homomorphisms to Sₙ up to conjugating the first generator's image, by
/// backtracking. Generators are assigned in an order that completes relators
/// early, and each relator is checked once all its generators are set.
fn homomorphisms(p: &GroupPresentation, n: usize) -> Vec<Vec<Perm>> {
    let g = p.num_generators();
    let gens_of: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            let mut v: Vec<usize> = r.letters().iter().map(|l| l.0).collect();
            v.sort();
            v.dedup();
            v
        })
        .collect();
    let mut order = vec![0usize];
    while order.len() < g {
        let next = (0..g)
            .filter(|k| !order.contains(k))
            .max_by_key(|&k| {
                let completed = gens_of
                    .iter()
                    .filter(|gs| gs.contains(&k) && gs.iter().all(|x| *x == k || order.contains(x)))
                    .count();
                (completed, std::cmp::Reverse(k))
            })
            .unwrap();
        order.push(next);
    }
    let position: Vec<usize> = (0..g).map(|k| order.iter().position(|&x| x == k).unwrap()).collect();
    let ready: Vec<Vec<usize>> = (0..g)
        .map(|step| {
            (0..gens_of.len())
                .filter(|&r| gens_of[r].iter().map(|&x| position[x]).max() == Some(step))
                .collect()
        })
        .collect();
    let search = Search {
        order,
        ready,
        perms: all_perms(n),
        firsts: class_representatives(n),
        id: (0..n as u8).collect(),
        p,
        n,
    };
    let mut images = vec![search.id.clone(); g];
    let mut out = Vec::new();
    search.run(0, &mut images, &mut out);
    out
}

struct Search<'a> {
    order: Vec<usize>,
    ready: Vec<Vec<usize>>,
    perms: Vec<Perm>,
    firsts: Vec<Perm>,
    id: Perm,
    p: &'a GroupPresentation,
    n: usize,
}

impl Search<'_> {
    fn run(&self, step: usize, images: &mut Vec<Perm>, out: &mut Vec<Vec<Perm>>) {
        if step == self.order.len() {
            out.push(images.clone());
            return;
        }
        let choices = if step == 0 { &self.firsts } else { &self.perms };
        for q in choices {
            images[self.order[step]] = q.clone();
            if self.ready[step]
                .iter()
                .all(|&r| eval(&self.p.relators()[r], images, self.n) == self.id)
            {
                self.run(step + 1, images, out);
            }
        }
        images[self.order[step]] = self.id.clone();
    }
}

fn assert_peripheral_commute(name: &str, n: usize) {
    let e = shipped_entry(name).unwrap();
    let homs = homomorphisms(&e.group, n);
    assert!(homs.len() > 1, "{name}: no nontrivial representations");
    let mut nonabelian = 0;
    for h in &homs {
        for (m, l) in e.meridians.iter().zip(&e.longitudes) {
            let (pm, pl) = (eval(m, h, n), eval(l, h, n));
            assert_eq!(compose(&pm, &pl), compose(&pl, &pm), "{name}: meridian and longitude fail to commute");
        }
        if h.iter().any(|a| h.iter().any(|b| compose(a, b) != compose(b, a))) {
            nonabelian += 1;
        }
    }
    assert!(nonabelian > 0, "{name}: test needs a nonabelian representation");
}

#[test]
fn longitudes_commute_with_meridians_in_s4() {
    for name in ["trefoil", "4^2_1", "5^2_1", "8^2_13", "4^2_1-stevedore"] {
        assert_peripheral_commute(name, 4);
    }
}

#[test]
fn longitudes_commute_with_meridians_in_s5() {
    for name in ["trefoil", "5^2_1", "wh-reef"] {
        assert_peripheral_commute(name, 5);
    }
}

#[test]
fn surgery_homology_matches_linking_matrix_on_all_entries() {
    for e in shipped_catalog() {
        let ab = h1_of_surgery(&e).unwrap();
        if e.kind == EntryKind::Link {
            let lk = cokernel_of_rows(&linking_matrix(&e).unwrap());
            assert_eq!((lk.free_rank, &lk.torsion), (ab.free_rank, &ab.torsion), "{}", e.name);
        }
    }
}

#[test]
fn knot_summands_have_expected_alexander_polynomials() {
    let pid = LaurentPid::new(Rationals);
    let stevedore = parse_presentation("gens: a,b\nrel: a (b a^-1 b a^-1 b^-1 a b^-1 a) = (b a^-1 b a^-1 b^-1 a b^-1 a) b").unwrap();
    let m = infinite_cyclic_cover_homology(&stevedore, &[1, 1], Rationals).unwrap();
    // 2t² − 5t + 2, monic.
    assert_eq!(m.factor_texts(&pid), vec!["t^2 - 5/2*t + 1"]);
    let trefoil = &shipped_entry("trefoil").unwrap().group;
    let m = infinite_cyclic_cover_homology(trefoil, &[1, 1], Rationals).unwrap();
    assert_eq!(m.factor_texts(&pid), vec!["t^2 - t + 1"]);
}

#[test]
fn trivial_links_give_free_abelian_homology() {
    for c in 1..=4usize {
        let names: Vec<String> = (0..c).map(|i| format!("m{i}")).collect();
        let mut text = format!("[entry]\nname = trivial\nkind = link\ngens = {}\n", names.join(", "));
        for n in &names {
            text.push_str(&format!("meridian = {n}\nlongitude = 1\n"));
        }
        text.push_str(&format!("framing = {}\n", vec!["0"; c].join(",")));
        let e = &load_catalog_str(&text).unwrap()[0];
        assert_eq!(h1_of_surgery(e).unwrap().free_rank, c);
        assert_eq!(load_catalog_str(&serialize_catalog(std::slice::from_ref(e))).unwrap()[0], *e);
    }
}
