//! Reference expansions, stored as decimal strings.
//!
//! `q` expansions list the coefficients of `q^0, q^2, q^4, ...`; `w`
//! polynomials list every power from `w^0` upward.

/// `(1+q²)⁶ I` under `w = 1/(1+q²)`.
pub(crate) const SMALL_ALPHA_Q: &[&str] = &[
    "240",
    "416",
    "152",
    "8",
    "92",
    "58",
    "3",
];

/// `F+ / (2w)` in `w`.
pub(crate) const F_PLUS_INNER: &[&str] = &[
    "-15",
    "-135",
    "-345",
    "190",
    "1735",
    "495",
    "-3615",
    "-716",
    "3615",
    "495",
    "-1735",
    "190",
    "345",
    "-135",
    "15",
];

/// `H+ / w` in `w`.
pub(crate) const H_PLUS_INNER: &[&str] = &[
    "-30",
    "-255",
    "-600",
    "410",
    "2900",
    "705",
    "-5550",
    "-1672",
    "5550",
    "705",
    "-2900",
    "410",
    "600",
    "-255",
    "30",
];

/// `G+` under `w = 1/(2(1+q²))`.
pub(crate) const G_PLUS_Q: &[&str] = &[
    "-1140603",
    "-17129046",
    "-115786348",
    "-468301840",
    "-1267262160",
    "-2427446688",
    "-3393664576",
    "-3517163008",
    "-2715321600",
    "-1554209280",
    "-649507840",
    "-192286720",
    "-38154240",
    "-4546560",
    "-245760",
];

/// `I+` under `w = 1/(2(1+q²))`.
pub(crate) const I_PLUS_Q: &[&str] = &[
    "-1083048",
    "-16069911",
    "-108024568",
    "-435858040",
    "-1178745360",
    "-2259543408",
    "-3165284416",
    "-3291555328",
    "-2553515520",
    "-1471031040",
    "-619724800",
    "-185251840",
    "-37171200",
    "-4485120",
    "-245760",
];

/// `V+` under `w = 1/(2(1+q²))`.
pub(crate) const V_PLUS_Q: &[&str] = &[
    "23565171557938261664962395",
    "1985238765536369188253388462",
    "76017937191609745093093565184",
    "1815476155917282265018752272232",
    "30868042081839055982554050213660",
    "401897536051918258546845673711320",
    "4195397709111549929883773768957292",
    "36238699732610615067411794056699104",
    "265002286089679374723172860122766982",
    "1669237124849349342077586449716389470",
    "9179934813394932229977676436328785920",
    "44555295354320392501114611345123622400",
    "192537160208281140648975165919934835200",
    "746181252269526741637909507751082171520",
    "2609372572626683435719917787491018652160",
    "8276209631283583168755734561689661224960",
    "23913569456882144063241575623509484876800",
    "63185851825755484161960668172292699909120",
    "153171842040744452342444666253152790732800",
    "341628452529444844018632398179833131991040",
    "702775058219816773204544225960017412751360",
    "1336281286191807830241756821296507838955520",
    "2352931028757956298911312671496544634142720",
    "3842851078067257537573706091171559356497920",
    "5829597689354288278514821031866786159656960",
    "8224048629268397888867021111129844469596160",
    "10800344227796355322915422778734559920914432",
    "13214925874596962589048294078754839901241344",
    "15075437985869745487585690312752934894436352",
    "16043253396277674458218536937392302561689600",
    "15933483495160554733717977505944446676500480",
    "14772181225346687498328707734409833005187072",
    "12786642631638024827680853914736629691449344",
    "10333607587858511627607426462208954269171712",
    "7796135691442288431829216828566360534548480",
    "5489455045169343972022956242977322445045760",
    "3606053976460179205452292516224406577479680",
    "2208802483012122361676530694278736018145280",
    "1260683716848402925787749700503070572544000",
    "669904634456217504368236284579198848204800",
    "331081492020125941589702200450146757509120",
    "152001230583526972614803279225239581491200",
    "64734238129983061042604032362158017740800",
    "25531661312772564369272230408940525977600",
    "9307900274880934185285303838052660019200",
    "3129622227458365558314112917099983667200",
    "968033669852811173795309928049750835200",
    "274640462267821497605095290057418342400",
    "71224038857339584104332613373237657600",
    "16816854347488682979216179348688076800",
    "3598246400042953802386878316412928000",
    "693860503839280523254707460767744000",
    "119794916777653504670468143054848000",
    "18371891299642536871251828277248000",
    "2478647665316721166509051740160000",
    "290656583441325139861690122240000",
    "29171448597603811259616067584000",
    "2455470675466333890778497024000",
    "168582129968383522599075840000",
    "9065459012974557989437440000",
    "358068461185282678456320000",
    "9236522547766697656320000",
    "116733302341443256320000",
];

/// `F− / (−2w)` in `w`.
pub(crate) const F_MINUS_INNER: &[&str] = &[
    "-3",
    "21",
    "-33",
    "-56",
    "130",
    "94",
    "-130",
    "-56",
    "33",
    "21",
    "3",
];

/// `H− / w` in `w`.
pub(crate) const H_MINUS_INNER: &[&str] = &[
    "6",
    "-39",
    "54",
    "100",
    "-200",
    "-128",
    "200",
    "100",
    "-54",
    "-39",
    "-6",
];

/// `G−` under `w = 1/(4(1+q²))`.
pub(crate) const G_MINUS_Q: &[&str] = &[
    "128409",
    "2102668",
    "14459888",
    "56813056",
    "142035456",
    "236177408",
    "264626176",
    "197525504",
    "94175232",
    "25952256",
    "3145728",
];

/// `I−` under `w = 1/(4(1+q²))`.
pub(crate) const I_MINUS_Q: &[&str] = &[
    "175743",
    "2666962",
    "17644496",
    "67116160",
    "162604032",
    "262406144",
    "286081024",
    "208437248",
    "97320960",
    "26345472",
    "3145728",
];

/// `V−` under `w = 1/(4(1+q²))`.
pub(crate) const V_MINUS_Q: &[&str] = &[
    "1058023271132626023",
    "51541890229923566472",
    "1213009372688989850064",
    "18352820646596071930240",
    "200442482186879766344000",
    "1682464063207304317242816",
    "11285809233594557704985856",
    "62123650712872430361438720",
    "286006349074965960756670464",
    "1116988330180696358380290048",
    "3741070988530167056939876352",
    "10836728622922107883411734528",
    "27330768999389436608140804096",
    "60330629581678789398471114752",
    "117040259220868123540341129216",
    "200169684615441568277429485568",
    "302487634652646366318853881856",
    "404485176548048584076188188672",
    "478958931700928292722105647104",
    "502214198209105947113507782656",
    "465950173145939141611449483264",
    "381911302204202972478305206272",
    "275855094787796630236532047872",
    "174972859491619945161380855808",
    "97001064005371803174963249152",
    "46708058892337905269349548032",
    "19376798019028218231165812736",
    "6852048396846611541188935680",
    "2036474622748306983572471808",
    "499070059195604547617685504",
    "98184545971566239935365120",
    "14905936080354118622773248",
    "1639091209276985243074560",
    "116172982490204328689664",
    "3984496719921263149056",
];
