#include "kratzer/reference_data.hpp"
#include <array>

namespace kratzer {

namespace {
// Factorisation-method columns.
constexpr std::array<ReferenceLevel, 21> co_kratzer{{
    {0, 0, -10.79431534387622},
    {1, 0, -10.69383913769446},
    {1, 1, -10.69337109882925},
    {2, 0, -10.59476059512928},
    {2, 1, -10.59429734443464},
    {2, 2, -10.59337288634942},
    {3, 0, -10.49705105930509},
    {3, 1, -10.49659537021400},
    {3, 2, -10.49568316746262},
    {3, 3, -10.49431563207918},
    {4, 0, -10.40068823210378},
    {4, 1, -10.40023809235447},
    {4, 2, -10.39933885575065},
    {4, 3, -10.39798982948594},
    {4, 4, -10.39619321456787},
    {5, 0, -10.30564563709163},
    {5, 1, -10.30520186777971},
    {5, 2, -10.30431444380035},
    {5, 3, -10.30298450330134},
    {5, 4, -10.30121238898166},
    {5, 5, -10.29899764904374},
}};

constexpr std::array<ReferenceLevel, 21> no_kratzer{{
    {0, 0, -8.002658755212952},
    {1, 0, -7.921456003136883},
    {1, 1, -7.921042972272428},
    {2, 0, -7.841483226715529},
    {2, 1, -7.841075958492119},
    {2, 2, -7.840262393682968},
    {3, 0, -7.76271486692960},
    {3, 1, -7.762314093207729},
    {3, 2, -7.761512650377457},
    {3, 3, -7.760311623981464},
    {4, 0, -7.685127711083608},
    {4, 1, -7.684732464238659},
    {4, 2, -7.683942903888297},
    {4, 3, -7.682760084230797},
    {4, 4, -7.681181936089156},
    {5, 0, -7.608697429711712},
    {5, 1, -7.608308414224594},
    {5, 2, -7.607531297904489},
    {5, 3, -7.606365523492213},
    {5, 4, -7.604810653591787},
    {5, 5, -7.602869548627632},
}};

constexpr std::array<ReferenceLevel, 21> co_modified{{
    {0, 0, 0.05082892797436500},
    {1, 0, 0.1513051341561269},
    {1, 1, 0.1517731730213381},
    {2, 0, 0.2503836767213095},
    {2, 1, 0.2508469274159442},
    {2, 2, 0.2517713855011650},
    {3, 0, 0.3480932125454999},
    {3, 1, 0.3485489016365868},
    {3, 2, 0.3494611043879683},
    {3, 3, 0.3508286397714091},
    {4, 0, 0.4444560397468020},
    {4, 1, 0.4449061794961153},
    {4, 2, 0.4458054160999403},
    {4, 3, 0.4471544423646421},
    {4, 4, 0.4489510572827147},
    {5, 0, 0.5394986347589601},
    {5, 1, 0.5399424040708798},
    {5, 2, 0.5408298280502333},
    {5, 3, 0.5421597685492472},
    {5, 4, 0.5439318828689306},
    {5, 5, 0.5461466228068463},
}};

constexpr std::array<ReferenceLevel, 21> no_modified{{
    {0, 0, 0.04112347897894253},
    {1, 0, 0.1223262310550117},
    {1, 1, 0.1227392619194667},
    {2, 0, 0.2022990074763653},
    {2, 1, 0.2027062756997760},
    {2, 2, 0.2035198405089265},
    {3, 0, 0.2810673574989346},
    {3, 1, 0.2814681409841651},
    {3, 2, 0.2822695838144371},
    {3, 3, 0.2834706102104301},
    {4, 0, 0.3586545231082869},
    {4, 1, 0.3590497699532351},
    {4, 2, 0.3598393303035978},
    {4, 3, 0.3610221499610970},
    {4, 4, 0.3626002981027385},
    {5, 0, 0.4350848044801827},
    {5, 1, 0.4354738199673003},
    {5, 2, 0.4362509362874052},
    {5, 3, 0.4374167106996811},
    {5, 4, 0.4389715806001080},
    {5, 5, 0.4409126855642622},
}};

constexpr std::array<ReferenceMatrixRow, 20> co_matrix{{
    {1, 0, -0.4761490924054464, 16.97323506451677, 195.3895273866551, 161.4430572576216},
    {1, 1, -0.4761710273791221, 16.97343118040934, 195.3940309777938, 161.4471686169751},
    {2, 0, -0.4107558210705384, 9.473123928272610, 162.6714457007481, 143.7251978442029},
    {2, 1, -0.4107755614421622, 9.473236107448747, 162.6755771602085, 143.7291049453111},
    {2, 2, -0.4108150436563324, 9.473460462197114, 162.6838400978704, 143.7369191734761},
    {3, 0, -0.3789129917968390, 7.666855095230551, 148.3356842660929, 133.0019740756318},
    {3, 1, -0.3789316534237137, 7.666946649417545, 148.3396482090482, 133.0057549102131},
    {3, 2, -0.3789689781099853, 7.667129754891770, 148.3475761191884, 133.0133166094049},
    {3, 3, -0.3790249687207100, 7.667404405854176, 148.3594680449690, 133.0246592332607},
    {4, 0, -0.3533372017343955, 6.615793772861618, 137.1863080576614, 123.9547205119381},
    {4, 1, -0.3533549972979473, 6.615873160774083, 137.1901403213880, 123.9583939998398},
    {4, 2, -0.3533905898264022, 6.616031934119029, 137.1978048773512, 123.9657410091131},
    {4, 3, -0.3534439821224761, 6.616270087936851, 137.2093017825661, 123.9767616066924},
    {4, 4, -0.3535151205980674, 6.616587357061658, 137.2246186798360, 123.9914439657127},
    {5, 0, -0.3312181486228352, 5.899103372782779, 127.7353299114129, 115.9371231658474},
    {5, 1, -0.3312351970446675, 5.899174359294310, 127.7390497423004, 115.9407010237118},
    {5, 2, -0.3312692952626132, 5.899316330129842, 127.7464894362121, 115.9478567759524},
    {5, 3, -0.3313204460252490, 5.899529280914656, 127.7576490574162, 115.9585904955868},
    {5, 4, -0.3313885980893305, 5.899812974634305, 127.7725166245981, 115.9728906753295},
    {5, 5, -0.3314738123034079, 5.900167633018892, 127.7911043436078, 115.9907690775700},
}};

constexpr std::array<ReferenceMatrixRow, 20> no_matrix{{
    {1, 0, -0.4819553974463722, 16.21611432627930, 178.3853413621973, 145.9531127096387},
    {1, 1, -0.4819818755489971, 16.21633768030118, 178.3902449613004, 145.9575696006980},
    {2, 0, -0.4124035377598499, 9.040224937878095, 147.1042625831576, 129.0238127074014},
    {2, 1, -0.4124272376527343, 9.040352590403065, 147.1087421492765, 129.0280369684704},
    {2, 2, -0.4124746395526131, 9.040607890585319, 147.1177013069172, 129.0364855257466},
    {3, 0, -0.3785773170199991, 7.313655510582683, 133.4152241892145, 118.7879131680491},
    {3, 1, -0.3785996534470747, 7.313759628367830, 133.4195129653269, 118.7919937085912},
    {3, 2, -0.3786443283574571, 7.313967860029029, 133.4280905503876, 118.8001548303296},
    {3, 3, -0.3787112793749515, 7.314279887895779, 133.4409442456685, 118.8123844698770},
    {4, 0, -0.3514058390444385, 6.309618628486895, 122.7741267465619, 110.1548894895881},
    {4, 1, -0.3514270813879861, 6.309708856787779, 122.7782656025786, 110.1588478890030},
    {4, 2, -0.3514695680843574, 6.309889310052519, 122.7865433532380, 110.1667647331330},
    {4, 3, -0.3515332399199089, 6.310159713089281, 122.7989477575504, 110.1786283313719},
    {4, 4, -0.3516182293790348, 6.310520592939504, 122.8155035676796, 110.1944623818006},
    {5, 0, -0.3278978812775772, 5.625407532078025, 113.7570644421939, 102.5062493780379},
    {5, 1, -0.3279181800627655, 5.625488165029850, 113.7610753342060, 102.5100990041463},
    {5, 2, -0.3279587796016631, 5.625649427995388, 113.7690971617573, 102.5177983057665},
    {5, 3, -0.3280196234075503, 5.625891075135918, 113.7811180744773, 102.5293359242055},
    {5, 4, -0.3281008382258643, 5.626213577576859, 113.7971620775729, 102.5447349224192},
    {5, 5, -0.3282023110716663, 5.626616443662535, 113.8172054699764, 102.5639725826513},
}};

} // namespace

std::span<const ReferenceLevel> reference_energies(std::string_view molecule,
                                                   PotentialKind kind) {
  const bool kratzer = kind == PotentialKind::kratzer;
  if (molecule == "CO")
    return kratzer ? std::span<const ReferenceLevel>(co_kratzer)
                   : std::span<const ReferenceLevel>(co_modified);
  if (molecule == "NO")
    return kratzer ? std::span<const ReferenceLevel>(no_kratzer)
                   : std::span<const ReferenceLevel>(no_modified);
  return {};
}

std::span<const ReferenceMatrixRow>
reference_matrix_elements(std::string_view molecule) {
  if (molecule == "CO")
    return co_matrix;
  if (molecule == "NO")
    return no_matrix;
  return {};
}

bool is_reference_molecule(const MoleculeSpec &m) {
  for (const auto &b : builtin_molecules())
    if (b.name == m.name && b.d0 == m.d0 && b.r0 == m.r0 &&
        b.mu_amu == m.mu_amu)
      return true;
  return false;
}

} // namespace kratzer
