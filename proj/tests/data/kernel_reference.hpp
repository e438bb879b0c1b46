// Copyright 2026 The srpass Authors
// SPDX-License-Identifier: Apache-2.0

// Generated by tests/oracles/talbot_kernels.py -- do not edit.
#pragma once

namespace srpass::testdata {

struct KernelReference {
  int mu;
  int nu;
  double y;
  double z;
  double re;
  double im;
};

inline constexpr KernelReference kKernelReference[] = {
    {1, 0, 0.5, 0.5, 1.0384550871588693, 0.11541772406656925},
    {1, 0, 0.5, 1, 1.2590792329917638, 0.3676374403309924},
    {1, 0, 0.5, 2, 2.1781011165691986, 0.65396365675833992},
    {1, 0, 0.5, 5, 5.2321658457945887, 1.3596467915871176},
    {1, 0, 1, 0.5, 1.074549965504048, 0.23180906874012352},
    {1, 0, 1, 1, 1.4903157154696393, 0.76189644003556851},
    {1, 0, 1, 2, 3.2878229725244048, 1.7925572230910057},
    {1, 0, 1, 5, 13.683541796905981, 7.1497181001665959},
    {1, 0, 2, 0.5, 1.1396241887870157, 0.46743457394446425},
    {1, 0, 2, 1, 1.8654215637121983, 1.6267273617170318},
    {1, 0, 2, 2, 5.0221978777157067, 5.5241329009692594},
    {1, 0, 2, 5, 41.127967908750048, 54.674654106729386},
    {1, 0, 5, 0.5, 1.2773098886831558, 1.1956415313402301},
    {1, 0, 5, 1, 2.2255085571290729, 4.764596840535211},
    {1, 0, 5, 2, 1.2629375077118902, 27.420381863058315},
    {1, 0, 5, 5, -429.39987018584233, 940.862158186798},
    {1, 0, 2, 3, 10.994024028547256, 13.67036113053463},
    {0, 1, 0.5, 0.5, 0.61453949792019474, -0.74530963335783372},
    {0, 1, 0.5, 1, 0.012145637177416075, -0.79084246963855513},
    {0, 1, 0.5, 2, -0.017133427619470502, -0.24926668008142687},
    {0, 1, 0.5, 5, 0.54056695339952379, -0.76424566613868165},
    {0, 1, 1, 0.5, 0.68665906778693901, -0.64772423228660924},
    {0, 1, 1, 1, 0.42544019476188419, -0.63707242005799473},
    {0, 1, 1, 2, 0.92748649841105455, -0.89851370204203305},
    {0, 1, 1, 5, 2.1550641030489361, -2.478690906523932},
    {0, 1, 2, 0.5, 0.82449966600255806, -0.44835352955350904},
    {0, 1, 2, 1, 1.2023548173483355, -0.22589586872859461},
    {0, 1, 2, 2, 3.5133282516084556, -0.97253225504403999},
    {0, 1, 2, 5, 18.51846066616522, -7.4652406658250493},
    {0, 1, 5, 0.5, 1.1860256964875179, 0.18204836846974307},
    {0, 1, 5, 1, 3.053473996808326, 1.7914347621110245},
    {0, 1, 5, 2, 12.297665718168268, 10.55660452262226},
    {0, 1, 5, 5, 275.31881609596393, 378.40925935516388},
    {0, 1, 2, 3, 6.1699715734678458, -2.258122464905038},
    {1, 1, 0.5, 0.5, 0.43036367871220149, -0.21195779461933727},
    {1, 1, 0.5, 1, 0.57923995498477377, -0.62346679790717384},
    {1, 1, 0.5, 2, 0.4516151684198834, -1.0976172720943345},
    {1, 1, 0.5, 5, 1.0619462288628996, -2.3457994461975325},
    {1, 1, 1, 0.5, 0.43976665051336638, -0.1939454488585545},
    {1, 1, 1, 1, 0.69948443004678162, -0.53243776035387757},
    {1, 1, 1, 2, 1.3455354625665194, -1.1801682370566751},
    {1, 1, 1, 5, 4.8142045033452639, -5.7642388469285227},
    {1, 1, 2, 0.5, 0.45789405174898664, -0.15756226139222883},
    {1, 1, 2, 1, 0.92631161522281323, -0.33153337318193139},
    {1, 1, 2, 2, 3.2483325780066497, -0.75443481305362553},
    {1, 1, 2, 5, 31.069947386277218, -11.304753621292414},
    {1, 1, 5, 0.5, 0.50679658143524352, -0.045642096097818932},
    {1, 1, 5, 1, 1.4865810392120932, 0.41398271983962652},
    {1, 1, 5, 2, 8.4318886702180275, 5.5173641052281889},
    {1, 1, 5, 5, 281.22644941581706, 352.35934314090313},
    {1, 1, 2, 3, 7.964241797719834, -2.4120262275397049},
    {2, 0, 0.5, 0.5, 0.50491657477629723, 0.019857767762927917},
    {2, 0, 0.5, 1, 1.069879380873141, 0.13872110890606022},
    {2, 0, 0.5, 2, 2.7625993372712962, 0.69360549879313636},
    {2, 0, 0.5, 5, 13.365187621029409, 3.3225255800665847},
    {2, 0, 1, 0.5, 0.5095903516929848, 0.03979786700316457},
    {2, 0, 1, 1, 1.1334697465441501, 0.28211584527566734},
    {2, 0, 1, 2, 3.450150945509945, 1.5834588371535511},
    {2, 0, 1, 5, 26.376513145539733, 13.514855185586708},
    {2, 0, 2, 0.5, 0.51820730591926698, 0.079919350184097456},
    {2, 0, 2, 1, 1.2412839735926637, 0.58236104796145511},
    {2, 0, 2, 2, 4.5183140197828391, 3.9365875472171786},
    {2, 0, 2, 5, 59.151271049715933, 74.060863768234318},
    {2, 0, 5, 0.5, 0.53817454890371989, 0.2021109358866752},
    {2, 0, 5, 1, 1.401146287722078, 1.5802395605304538},
    {2, 0, 5, 2, 3.8174902769766897, 15.093708835104771},
    {2, 0, 5, 5, -303.66955643833457, 873.46474658945978},
    {2, 0, 2, 3, 12.188946969340545, 13.060318201730574},
    {0, 2, 0.5, 0.5, 0.28400309016748603, -0.40571055530223168},
    {0, 2, 0.5, 1, -0.26273984610298738, -0.89587896644823734},
    {0, 2, 0.5, 2, -1.1477785372702338, 0.57161404849546764},
    {0, 2, 0.5, 5, -1.1110147067629238, 0.11313782351294351},
    {0, 2, 1, 0.5, 0.29765277264012689, -0.39052827593187895},
    {0, 2, 1, 1, -0.11132301907040034, -0.87491512649308262},
    {0, 2, 1, 2, -0.8147977102836148, -0.26561437889137284},
    {0, 2, 1, 5, -0.48729794075718981, -1.1348556485431381},
    {0, 2, 2, 0.5, 0.32434182216208768, -0.35969667376749687},
    {0, 2, 2, 1, 0.18483175181556664, -0.81060470823841559},
    {0, 2, 2, 2, 0.31741914461014521, -1.564939416777119},
    {0, 2, 2, 5, -1.0117223190138309, -9.7497145642250187},
    {0, 2, 5, 0.5, 0.39946332171662862, -0.26355575575153407},
    {0, 2, 5, 1, 1.0072990384742592, -0.4436094754322128},
    {0, 2, 5, 2, 6.3314218851991446, -1.5268192889008539},
    {0, 2, 5, 5, 208.13494267985141, -38.47998911240352},
    {0, 2, 2, 3, -0.16058116913260235, -3.6757451028766875},
};

}  // namespace srpass::testdata
