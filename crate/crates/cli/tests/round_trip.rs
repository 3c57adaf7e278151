use hncalc::json;
use hncalc::parse_bundle;
use hncalc_core::sequences::enumerate_all;
use hncalc_core::SlopeWindow;

#[test]
fn parse_inverts_display_up_to_rank_five() {
    let all = enumerate_all(&SlopeWindow::integers(-2, 2, 5));
    assert!(all.len() > 500);
    for b in all {
        assert_eq!(parse_bundle(&b.to_string()).unwrap(), b);
        let spaced: String = b.to_string().chars().flat_map(|c| [c, ' ']).collect();
        assert_eq!(parse_bundle(&spaced).unwrap(), b, "{spaced}");
        let encoded = json::bundle(&b);
        assert_eq!(parse_bundle(encoded["text"].as_str().unwrap()).unwrap(), b);
    }
}
