//! End-to-end acceptance suite: one pass/fail line per criterion.
//! Golden tables are embedded as the JSON the CLI consumes.

use aci3::aci::{check_table, decompose, InvalidReason, Verdict};
use aci3::gorenstein::{gorenstein_betti_table, validate_degree_sequence, CiMinProvider};
use aci3::lab::resolution::{regular_sequence_test, RegSeqAnswer};
use aci3::lab::{
    colon_ideal, minimal_resolution_fp, pfaffian_gorenstein_sample, GradedIdealFp, HPoly,
    OracleMinProvider, PrimeField,
};
use aci3::liaison::{
    cone_hilbert_identity, link_aci_to_gorenstein, mapping_cone_resolution,
    socle_degree_resolution, LinkContext,
};
use aci3::monomial::{
    minimal_resolution_oracle, realize_t2, realize_t3, resolution_mont2, resolution_mont3,
    MonomialError, MonomialIdeal3,
};
use aci3::shifts::{BettiTable, FreeModuleShifts};

fn table_from_json(json: &str) -> BettiTable {
    serde_json::from_str(json).expect("golden JSON parses")
}

fn golden_a() -> BettiTable {
    table_from_json(
        r#"{"codim":3,"F":[[8,9,10,14],
            [17,18,19,19,19,19,19,20,20,20,20,21,21,21],
            [20,20,20,21,21,21,21,22,22,22,22]]}"#,
    )
}

fn golden_b() -> BettiTable {
    table_from_json(r#"{"codim":3,"F":[[4,4,6,7],[7,8,10,10,11],[11,14]]}"#)
}

fn golden_c() -> BettiTable {
    table_from_json(r#"{"codim":3,"F":[[2,2,2,5],[4,4,4,4,6,6],[5,5,7]]}"#)
}

fn fms(v: &[i64]) -> FreeModuleShifts {
    FreeModuleShifts::new(v.to_vec())
}

type Criterion = (&'static str, fn() -> Result<(), String>);

fn c1_golden_a_analysis() -> Result<(), String> {
    let dec = decompose(&golden_a()).map_err(|e| e.to_string())?;
    let s = &dec.shape;
    if s.dstar != 14 {
        return Err(format!("d* = {}, want 14", s.dstar));
    }
    if s.d != [8, 9, 10] {
        return Err(format!("d = {:?}, want [8,9,10]", s.d));
    }
    if s.s != vec![19, 19, 19, 19, 20, 20, 20, 20, 21, 21, 21] {
        return Err(format!("s = {:?}", s.s));
    }
    if (s.t(), s.u(), s.dtotal()) != (11, 54, 41) {
        return Err(format!("(t,u,d) = {:?}", (s.t(), s.u(), s.dtotal())));
    }
    Ok(())
}

fn c2_golden_b_link_and_realize() -> Result<(), String> {
    let table = golden_b();
    let dec = decompose(&table).map_err(|e| e.to_string())?;
    if dec.shape.dstar != 4 {
        return Err(format!("d* = {}, want 4", dec.shape.dstar));
    }
    let link = link_aci_to_gorenstein(&dec).map_err(|e| e.to_string())?;
    let want = BettiTable::new(
        3,
        vec![fms(&[3, 4, 6, 6, 7]), fms(&[6, 7, 7, 9, 10]), fms(&[13])],
    )
    .unwrap();
    if link.raw != want || link.table != want {
        return Err(format!("linked table {:?}, want {:?}", link.table, want));
    }
    let witness = link
        .same_betti_witness
        .ok_or("missing same-Betti witness for d* = d_1")?;
    let g_shape = validate_degree_sequence(&[3, 4, 6]).unwrap();
    if witness != gorenstein_betti_table(&g_shape) {
        return Err("witness is not the 3-generator Gorenstein table".into());
    }
    let ideal = realize_t2(&dec.shape).map_err(|e| e.to_string())?;
    let resolved = minimal_resolution_oracle(&ideal).map_err(|e| e.to_string())?;
    if resolved != table {
        return Err("realized ideal resolves to a different table".into());
    }
    Ok(())
}

fn c3_golden_c_not_realizable() -> Result<(), String> {
    let dec = decompose(&golden_c()).map_err(|e| e.to_string())?;
    let s = &dec.shape;
    if s.dstar != 5 || s.s != vec![4, 6, 6] {
        return Err(format!("shape ({}, {:?})", s.dstar, s.s));
    }
    match realize_t3(s) {
        Err(MonomialError::NotRealizable(msg)) if msg.contains("s_1 = 4 <= d* = 5") => Ok(()),
        other => Err(format!("expected NotRealizable(s_1 < d*), got {other:?}")),
    }
}

fn mont2_params(max_a: i64) -> Vec<[i64; 5]> {
    let mut out = Vec::new();
    for a1 in 2..=max_a {
        for a2 in 2..=max_a {
            for a3 in 1..=max_a {
                for b1 in 1..a1 {
                    for b2 in 1..a2 {
                        out.push([a1, a2, a3, b1, b2]);
                    }
                }
            }
        }
    }
    out
}

fn mont3_params(max_a: i64) -> Vec<[i64; 6]> {
    let mut out = Vec::new();
    for a1 in 2..=max_a {
        for a2 in 2..=max_a {
            for a3 in 2..=max_a {
                for b1 in 1..a1 {
                    for b2 in 1..a2 {
                        for b3 in 1..a3 {
                            out.push([a1, a2, a3, b1, b2, b3]);
                        }
                    }
                }
            }
        }
    }
    out
}

fn c4_closed_forms_vs_oracle() -> Result<(), String> {
    for p in mont2_params(5) {
        let closed = resolution_mont2(p[0], p[1], p[2], p[3], p[4]).map_err(|e| e.to_string())?;
        let ideal = MonomialIdeal3::new(vec![
            [p[0] as u32, 0, 0],
            [0, p[1] as u32, 0],
            [0, 0, p[2] as u32],
            [p[3] as u32, p[4] as u32, 0],
        ]);
        let oracle = minimal_resolution_oracle(&ideal).map_err(|e| e.to_string())?;
        if closed != oracle {
            return Err(format!("mont2 {:?}: closed form != oracle", p));
        }
        let data = aci3::aci::extract_dstar(&oracle).map_err(|e| e.to_string())?;
        if data.dstar != p[2] {
            return Err(format!("mont2 {:?}: d* = {}, want a3 = {}", p, data.dstar, p[2]));
        }
    }
    for p in mont3_params(4) {
        let closed = resolution_mont3([p[0], p[1], p[2]], [p[3], p[4], p[5]])
            .map_err(|e| e.to_string())?;
        let ideal = MonomialIdeal3::new(vec![
            [p[0] as u32, 0, 0],
            [0, p[1] as u32, 0],
            [0, 0, p[2] as u32],
            [p[3] as u32, p[4] as u32, p[5] as u32],
        ]);
        let oracle = minimal_resolution_oracle(&ideal).map_err(|e| e.to_string())?;
        if closed != oracle {
            return Err(format!("mont3 {:?}: closed form != oracle", p));
        }
        let data = aci3::aci::extract_dstar(&oracle).map_err(|e| e.to_string())?;
        if data.dstar != p[3] + p[4] + p[5] {
            return Err(format!("mont3 {:?}: d* = {}", p, data.dstar));
        }
    }
    Ok(())
}

fn c5_decomposition_and_sum_identity() -> Result<(), String> {
    let mut tables = Vec::new();
    for p in mont2_params(5) {
        tables.push(resolution_mont2(p[0], p[1], p[2], p[3], p[4]).unwrap());
    }
    for p in mont3_params(4) {
        tables.push(resolution_mont3([p[0], p[1], p[2]], [p[3], p[4], p[5]]).unwrap());
    }
    for t in &tables {
        let dec = decompose(t).map_err(|e| format!("{t:?}: {e}"))?;
        if dec.shape.s_q() != dec.shape.required_s_sum() {
            return Err(format!("{t:?}: sum identity fails"));
        }
    }
    Ok(())
}

fn valid_delta_tuples(max_entry: i64, len: usize) -> Vec<Vec<i64>> {
    // nondecreasing tuples, filtered through validation
    let mut out = Vec::new();
    let mut cur = vec![1i64; len];
    loop {
        if validate_degree_sequence(&cur).is_ok() {
            out.push(cur.clone());
        }
        // next nondecreasing tuple
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max_entry {
                cur[i] += 1;
                for j in (i + 1)..len {
                    cur[j] = cur[i];
                }
                break;
            }
        }
    }
}

fn c6_gorenstein_self_duality() -> Result<(), String> {
    let mut checked = 0usize;
    for len in [3usize, 5, 7, 9] {
        for delta in valid_delta_tuples(8, len) {
            let shape = validate_degree_sequence(&delta).unwrap();
            let table = gorenstein_betti_table(&shape);
            if table.modules[1] != table.modules[0].dual_twist(shape.theta) {
                return Err(format!("{delta:?}: F2 != dual of F1"));
            }
            if table.rank_alternating_sum() != 0 || table.shift_alternating_sum() != 0 {
                return Err(format!("{delta:?}: alternating sums nonzero"));
            }
            checked += 1;
        }
    }
    if checked < 100 {
        return Err(format!("only {checked} valid sequences checked"));
    }
    Ok(())
}

fn c7_liaison_hilbert_identity() -> Result<(), String> {
    // (G, K, d*) triples: Gorenstein table G, CI table K with
    // theta_Z = theta_G + d*, including socle-degree cases d* = e_Z where
    // G is the Koszul table of three linear forms.
    let deltas: Vec<Vec<i64>> = vec![
        vec![1, 1, 1],
        vec![2, 2, 2],
        vec![2, 3, 4],
        vec![3, 4, 6],
        vec![2, 2, 2, 4, 4],
        vec![3, 3, 4, 4, 4],
        vec![2, 3, 3, 4, 4],
        vec![3, 4, 6, 6, 7],
    ];
    let mut count = 0usize;
    for delta in &deltas {
        let g_shape = validate_degree_sequence(delta).unwrap();
        let g = gorenstein_betti_table(&g_shape);
        for dstar in 1..=4i64 {
            let theta_z = g_shape.theta + dstar;
            // split theta_Z into three CI degrees, as balanced as possible
            let k1 = theta_z / 3;
            let k2 = (theta_z - k1) / 2;
            let k3 = theta_z - k1 - k2;
            if k1 < 1 {
                continue;
            }
            let k = BettiTable::koszul(&[k1, k2, k3]);
            let ctx = match LinkContext::new(theta_z, dstar, 3) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let cone = mapping_cone_resolution(&g, &k, &ctx).map_err(|e| e.to_string())?;
            if !cone_hilbert_identity(&cone.table, &g, &k, &ctx) {
                return Err(format!("HF identity fails for delta={delta:?}, d*={dstar}"));
            }
            count += 1;
        }
    }
    // socle-degree cases: d* = e_Z, G = Koszul(1,1,1) with theta_G = 3
    let g = BettiTable::koszul(&[1, 1, 1]);
    for degrees in [[2i64, 2, 2], [2, 3, 4], [3, 4, 5], [2, 2, 5], [3, 3, 3]] {
        let k = BettiTable::koszul(&degrees);
        let theta_z: i64 = degrees.iter().sum();
        let e = theta_z - 3;
        let ctx = LinkContext::new(theta_z, e, 3).map_err(|e| e.to_string())?;
        let cone = mapping_cone_resolution(&g, &k, &ctx).map_err(|e| e.to_string())?;
        if !cone_hilbert_identity(&cone.table, &g, &k, &ctx) {
            return Err(format!("socle-degree HF identity fails for {degrees:?}"));
        }
        // the dedicated socle-degree construction must reproduce the cone
        let socle = socle_degree_resolution(&k, 3, e).map_err(|e| e.to_string())?;
        if cone.table != socle {
            return Err(format!("socle-degree tables disagree for {degrees:?}"));
        }
        count += 1;
    }
    if count < 25 {
        return Err(format!("only {count} triples checked"));
    }
    Ok(())
}

fn c8_prime_field_oracles() -> Result<(), String> {
    let field = PrimeField::new(32003);

    // Koszul tables for every monomial CI with degrees <= 5
    for a1 in 1..=5i64 {
        for a2 in a1..=5 {
            for a3 in a2..=5 {
                let ideal = GradedIdealFp::new(
                    field,
                    vec![
                        HPoly::monomial([a1, 0, 0]),
                        HPoly::monomial([0, a2, 0]),
                        HPoly::monomial([0, 0, a3]),
                    ],
                );
                let table =
                    minimal_resolution_fp(&ideal, a1 + a2 + a3).map_err(|e| e.to_string())?;
                if table != BettiTable::koszul(&[a1, a2, a3]) {
                    return Err(format!("CI ({a1},{a2},{a3}) resolution mismatch"));
                }
            }
        }
    }

    // generic (3,4,5)-CI inside (x^3, y^4, z^5, x y^2), colon = its link,
    // which must be the complete intersection with degrees (2,2,5)
    let aci = GradedIdealFp::new(
        field,
        vec![
            HPoly::monomial([3, 0, 0]),
            HPoly::monomial([0, 4, 0]),
            HPoly::monomial([0, 0, 5]),
            HPoly::monomial([1, 2, 0]),
        ],
    );
    let witness = match regular_sequence_test(&aci, [3, 4, 5], 2026, 5).map_err(|e| e.to_string())? {
        RegSeqAnswer::Yes(w) => w,
        RegSeqAnswer::ProbablyNo => return Err("no generic CI found in the ACI".into()),
    };
    let z = GradedIdealFp::new(field, witness.forms);
    let link = colon_ideal(&z, &aci, 15).map_err(|e| e.to_string())?;
    let link_table = minimal_resolution_fp(&link, 12).map_err(|e| e.to_string())?;
    let want = gorenstein_betti_table(&validate_degree_sequence(&[2, 2, 5]).unwrap());
    if link_table != want {
        return Err(format!("link table {:?}, want {:?}", link_table, want));
    }

    // pfaffian samples for delta = (2,2,2,2,2) on five seeds
    let shape = validate_degree_sequence(&[2, 2, 2, 2, 2]).unwrap();
    let want = BettiTable::new(3, vec![fms(&[2; 5]), fms(&[3; 5]), fms(&[5])]).unwrap();
    for seed in 1..=5u64 {
        let sample =
            pfaffian_gorenstein_sample(&shape, field, seed, 8).map_err(|e| e.to_string())?;
        if sample.table != want {
            return Err(format!("pfaffian sample seed {seed} has wrong table"));
        }
    }
    Ok(())
}

fn c9_characterization_coherence() -> Result<(), String> {
    let oracle = OracleMinProvider::new(2026).with_max_entry(14);

    for (name, table) in [("A", golden_a()), ("B", golden_b()), ("C", golden_c())] {
        match check_table(&table, &oracle) {
            Verdict::Valid => {}
            other => return Err(format!("golden {name}: {other:?} under oracle provider")),
        }
    }
    // golden C under the built-in CI-only provider: the min question is
    // honestly unanswered, the documented outcome is Inconclusive
    match check_table(&golden_c(), &CiMinProvider) {
        Verdict::Inconclusive => {}
        other => return Err(format!("golden C under CI provider: {other:?}")),
    }

    // mutation 1: broken sum identity (same decomposable structure as
    // golden B, s = (8,10) sums to 18 instead of 17)
    let broken_sum = table_from_json(r#"{"codim":3,"F":[[4,4,6,7],[8,8,10,10,11],[11,13]]}"#);
    match check_table(&broken_sum, &oracle) {
        Verdict::Invalid(InvalidReason::SumIdentity { got: 18, required: 17 }) => {}
        other => return Err(format!("broken sum: {other:?}")),
    }

    // mutation 2: sum identity holds but a mirror pair of s' violates the
    // linked-sequence inequality d > s'_i + s'_mirror (s = (4,13))
    let broken_gaeta = table_from_json(r#"{"codim":3,"F":[[4,4,6,7],[4,8,10,11,13],[8,17]]}"#);
    match check_table(&broken_gaeta, &oracle) {
        Verdict::Invalid(InvalidReason::PairSumViolation { .. }) => {}
        other => return Err(format!("broken mirror inequality: {other:?}")),
    }

    // mutation 3: F2' deviates from the parity-prescribed multiset
    let broken_f2p = table_from_json(r#"{"codim":3,"F":[[4,4,6,7],[7,9,10,10,10],[11,14]]}"#);
    match check_table(&broken_f2p, &oracle) {
        Verdict::Invalid(InvalidReason::Structure(msg)) if msg.contains("F2'") => {}
        other => return Err(format!("broken F2': {other:?}")),
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: Vec<Criterion> = vec![
        ("1 golden A invariant extraction", c1_golden_a_analysis),
        ("2 golden B link and realization", c2_golden_b_link_and_realize),
        ("3 golden C not realizable", c3_golden_c_not_realizable),
        ("4 closed forms vs oracle", c4_closed_forms_vs_oracle),
        ("5 decomposition and sum identity", c5_decomposition_and_sum_identity),
        ("6 Gorenstein self-duality", c6_gorenstein_self_duality),
        ("7 liaison Hilbert function identity", c7_liaison_hilbert_identity),
        ("8 prime-field oracle consistency", c8_prime_field_oracles),
        ("9 characterization coherence", c9_characterization_coherence),
    ];
    let mut failed = false;
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("ACCEPTANCE {name}: PASS"),
            Err(e) => {
                println!("ACCEPTANCE {name}: FAIL ({e})");
                failed = true;
            }
        }
    }
    assert!(!failed, "at least one acceptance criterion failed");
}
