#ifndef ULW_TESTS_FIXTURES_HPP
#define ULW_TESTS_FIXTURES_HPP

#include <array>
#include <string_view>

namespace fixtures {

// Degree-3 universal Lyndon words (one isomorphism class).
inline constexpr std::array<std::string_view, 3> kDegree3 = {
    "212313", "323121", "131232"};

// The word whose length-3 factors are all distinct yet which is not a ULW;
// rotation 20 is Lyndon for no order, rotation 8 for two orders.
inline constexpr std::string_view kNotUlw = "123412431324134214231432";
inline constexpr std::string_view kNotUlwWitness = "314321234124313241342142";
inline constexpr std::string_view kDoubleOrderConjugate = "313241342142314321234124";

// A degree-4 ULW that is not of Jackson type (it lacks the factors
// 142, 143, 241, 243, 341, 342).
inline constexpr std::string_view kNonJacksonUlw = "123431242314132421343214";

// A universal order word that is not a ULW.
inline constexpr std::string_view kOrderWordNotUlw = "123421323121424314324134";

// The 20 Jackson classes of degree 4, presented starting with 1231.
inline constexpr std::array<std::string_view, 20> kJacksonTable = {
    "123124132431432142342134", "123124132134214324314234",
    "123124314214321324134234", "123124134213243214314234",
    "123124132431421432134234", "123124314234213214324134",
    "123124314213214324134234", "123124321431423421324134",
    "123124132431423421432134", "123124134213243143214234",
    "123124314214324132134234", "123124132431432134214234",
    "123124132432143142342134", "123124321342143142341324",
    "123124132431432142134234", "123124132143243142134234",
    "123124314234132134214324", "123124132432143142134234",
    "123124314234134214321324", "123124134214321324314234"};

// The 21 non-Jackson classes of degree 4, presented starting with 2123.
inline constexpr std::array<std::string_view, 21> kNonJacksonTable = {
    "212313243134212414234143", "212313241432124313414234",
    "212313241423414321243134", "212313241432124313423414",
    "212313421243132414234143", "212313414234212431324143",
    "212313241421243134234143", "212341423132414321243134",
    "212313241423414313421243", "212313212414324313414234",
    "212313243134142342124143", "212313212414324313423414",
    "212313212432414234143134", "212313414234212414313243",
    "212313212414234143243134", "212313212432414313423414",
    "212313212431342341432414", "212313243212414313423414",
    "212313241431342341421243", "212313212432414313414234",
    "212313212431341432414234"};

// The refinement choices from the worked degree-3 examples.
inline constexpr std::string_view kNonHamiltonianScript = R"(- : 1,2
1 : 1,3
2 : 2,3
11 : 2,3
22 : 1,3
)";
inline constexpr std::string_view kHamiltonianScript = R"(- : 1,2,3
1 : 2,3
2 : 1,3
3 : 1,2
)";

}  // namespace fixtures

#endif  // ULW_TESTS_FIXTURES_HPP
