use compoly_wasm::{analyze_json, dilate_count, paths_json, ANALYZE_MAX_N, PATHS_MAX_N};

#[test]
fn analyze_two_one() {
    let v = analyze_json("2,1").unwrap();
    assert_eq!(v["h"], serde_json::json!([1, 7, 7, 1]));
    assert_eq!(v["h_total"], 16);
    assert_eq!(v["real_and_inside"], true);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 3);
    for r in roots {
        let r = r.as_f64().unwrap();
        assert!((-1.0 - 1e-9..=1e-9).contains(&r), "{r}");
    }
}

#[test]
fn roots_are_roots() {
    let v = analyze_json("1,2,1").unwrap();
    let coeffs: Vec<f64> = v["ehrhart_coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_f64().unwrap())
        .collect();
    for r in v["roots"].as_array().unwrap() {
        let r = r.as_f64().unwrap();
        let value: f64 = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        assert!(value.abs() < 1e-8, "Ehr({r}) = {value}");
    }
}

#[test]
fn one_by_one_has_catalan_many_paths() {
    // Paths below the staircase of 1,1,1,1 are counted by the Catalan number C_5.
    let v = paths_json("1,1,1,1").unwrap();
    let paths = v["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 42);
    assert_eq!(v["boundary_word"], "ENENENENEN");
    for p in paths {
        let verts = p["vertices"].as_array().unwrap();
        assert_eq!(verts.first().unwrap(), &serde_json::json!([-1, 0]));
        assert_eq!(verts.last().unwrap(), &serde_json::json!([4, 5]));
    }
}

#[test]
fn corner_counts_match_h_vector() {
    let paths = paths_json("2,1,2").unwrap();
    let h = analyze_json("2,1,2").unwrap()["h"].clone();
    let mut tally = vec![0u64; 6];
    for p in paths["paths"].as_array().unwrap() {
        tally[p["corners"].as_u64().unwrap() as usize - 1] += 1;
    }
    assert_eq!(serde_json::json!(tally), h);
}

#[test]
fn dilates() {
    assert_eq!(dilate_count("1,1", 2).unwrap(), "12");
    assert_eq!(dilate_count("2", 0).unwrap(), "1");
}

#[test]
fn size_caps() {
    let big = ["1"; ANALYZE_MAX_N + 1].join(",");
    assert!(analyze_json(&big).is_err());
    let wide = ["1"; PATHS_MAX_N + 1].join(",");
    assert!(paths_json(&wide).is_err());
    assert!(analyze_json("3,0").is_err());
}
