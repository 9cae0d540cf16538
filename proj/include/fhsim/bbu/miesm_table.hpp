// SPDX-License-Identifier: Apache-2.0
// Generated by tools/miesm_table_gen.cpp; do not edit.
#pragma once

namespace fhsim::bbu::detail {

// 256QAM constrained capacity over AWGN, bits/symbol, on a uniform
// dB grid. Saturates to 8.0 in double precision above ~32 dB.
inline constexpr double kMiTableMinDb = -20.0;
inline constexpr double kMiTableStepDb = 0.1;
inline constexpr int kMiTableCount = 601;
inline constexpr double kMiTableBits[601] = {
    1.4355292131948083e-02,
    1.4687973338658011e-02,
    1.5028324282400973e-02,
    1.5376519911065145e-02,
    1.5732739075806634e-02,
    1.6097164614103932e-02,
    1.6469983434308055e-02,
    1.6851386601866025e-02,
    1.7241569427092429e-02,
    1.7640731554593891e-02,
    1.8049077054421048e-02,
    1.8466814514816576e-02,
    1.8894157136647216e-02,
    1.9331322829610365e-02,
    1.9778534310173512e-02,
    2.0236019201181676e-02,
    2.0704010133341555e-02,
    2.1182744848388779e-02,
    2.1672466304181626e-02,
    2.2173422781412988e-02,
    2.2685867992402464e-02,
    2.3210061191540454e-02,
    2.3746267287684475e-02,
    2.4294756958366470e-02,
    2.4855806765985200e-02,
    2.5429699275749229e-02,
    2.6016723175652068e-02,
    2.6617173398251204e-02,
    2.7231351244489943e-02,
    2.7859564509251200e-02,
    2.8502127609102423e-02,
    2.9159361711653453e-02,
    2.9831594867106404e-02,
    3.0519162141621869e-02,
    3.1222405752579618e-02,
    3.1941675205777287e-02,
    3.2677327434641690e-02,
    3.3429726941178295e-02,
    3.4199245938888012e-02,
    3.4986264497621100e-02,
    3.5791170690139928e-02,
    3.6614360740700569e-02,
    3.7456239175244654e-02,
    3.8317218973617173e-02,
    3.9197721723348344e-02,
    4.0098177775225174e-02,
    4.1019026400655356e-02,
    4.1960715950502880e-02,
    4.2923704015741748e-02,
    4.3908457589506789e-02,
    4.4915453230734315e-02,
    4.5945177229275380e-02,
    4.6998125772394594e-02,
    4.8074805112559460e-02,
    4.9175731736600170e-02,
    5.0301432535905910e-02,
    5.1452444977917011e-02,
    5.2629317278502619e-02,
    5.3832608575319796e-02,
    5.5062889101989754e-02,
    5.6320740363100086e-02,
    5.7606755309655533e-02,
    5.8921538515213534e-02,
    6.0265706352290671e-02,
    6.1639887169079977e-02,
    6.3044721466185116e-02,
    6.4480862073481582e-02,
    6.5948974326655474e-02,
    6.7449736243428760e-02,
    6.8983838699253397e-02,
    7.0551985602370415e-02,
    7.2154894067894659e-02,
    7.3793294590826619e-02,
    7.5467931217815476e-02,
    7.7179561717340306e-02,
    7.8928957748220618e-02,
    8.0716905026107177e-02,
    8.2544203487682211e-02,
    8.4411667452498840e-02,
    8.6320125781979229e-02,
    8.8270422035349405e-02,
    9.0263414622310911e-02,
    9.2299976952001650e-02,
    9.4380997578035419e-02,
    9.6507380339215132e-02,
    9.8680044495662145e-02,
    1.0089992485987320e-01,
    1.0316797192255578e-01,
    1.0548515197247976e-01,
    1.0785244721051690e-01,
    1.1027085585687413e-01,
    1.1274139225144086e-01,
    1.1526508694676618e-01,
    1.1784298679317917e-01,
    1.2047615501554265e-01,
    1.2316567128126632e-01,
    1.2591263175907130e-01,
    1.2871814916783375e-01,
    1.3158335281532807e-01,
    1.3450938862596917e-01,
    1.3749741915730862e-01,
    1.4054862360451725e-01,
    1.4366419779242889e-01,
    1.4684535415446831e-01,
    1.5009332169797940e-01,
    1.5340934595523148e-01,
    1.5679468891954329e-01,
    1.6025062896594378e-01,
    1.6377846075567248e-01,
    1.6737949512391914e-01,
    1.7105505895006345e-01,
    1.7480649501001277e-01,
    1.7863516180952299e-01,
    1.8254243339838183e-01,
    1.8652969916433371e-01,
    1.9059836360627980e-01,
    1.9474984608614943e-01,
    1.9898558055847637e-01,
    2.0330701527737816e-01,
    2.0771561248001014e-01,
    2.1221284804587093e-01,
    2.1680021113145287e-01,
    2.2147920377934671e-01,
    2.2625134050140083e-01,
    2.3111814783515516e-01,
    2.3608116387302669e-01,
    2.4114193776359638e-01,
    2.4630202918449573e-01,
    2.5156300778627916e-01,
    2.5692645260687730e-01,
    2.6239395145600319e-01,
    2.6796710026913040e-01,
    2.7364750243067881e-01,
    2.7943676806594198e-01,
    2.8533651330144316e-01,
    2.9134835949344406e-01,
    2.9747393242440801e-01,
    3.0371486146715654e-01,
    3.1007277871663685e-01,
    3.1654931808923070e-01,
    3.2314611438965990e-01,
    3.2986480234541116e-01,
    3.3670701560903016e-01,
    3.4367438572833553e-01,
    3.5076854108494349e-01,
    3.5799110580162186e-01,
    3.6534369861856852e-01,
    3.7282793173971118e-01,
    3.8044540964933837e-01,
    3.8819772790003260e-01,
    3.9608647187266133e-01,
    4.0411321550958590e-01,
    4.1227952002214430e-01,
    4.2058693257358026e-01,
    4.2903698493891707e-01,
    4.3763119214313395e-01,
    4.4637105107939679e-01,
    4.5525803910895579e-01,
    4.6429361264469282e-01,
    4.7347920572027657e-01,
    4.8281622854710093e-01,
    4.9230606606128990e-01,
    5.0195007646316192e-01,
    5.1174958975178786e-01,
    5.2170590625719981e-01,
    5.3182029517324736e-01,
    5.4209399309389461e-01,
    5.5252820255611024e-01,
    5.6312409059261270e-01,
    5.7388278729767705e-01,
    5.8480538440943430e-01,
    5.9589293391242570e-01,
    6.0714644666366091e-01,
    6.1856689104630114e-01,
    6.3015519165442235e-01,
    6.4191222801300896e-01,
    6.5383883333689674e-01,
    6.6593579333271968e-01,
    6.7820384504789999e-01,
    6.9064367577053343e-01,
    7.0325592198433728e-01,
    7.1604116838248988e-01,
    7.2899994694449255e-01,
    7.4213273607967789e-01,
    7.5543995984143830e-01,
    7.6892198721562899e-01,
    7.8257913148691660e-01,
    7.9641164968640954e-01,
    8.1041974212380730e-01,
    8.2460355200722368e-01,
    8.3896316515351810e-01,
    8.5349860979172476e-01,
    8.6820985646184923e-01,
    8.8309681801137607e-01,
    8.9815934969099764e-01,
    9.1339724935096456e-01,
    9.2881025773938841e-01,
    9.4439805890293993e-01,
    9.6016028069037773e-01,
    9.7609649535878606e-01,
    9.9220622028207739e-01,
    1.0084889187604720e+00,
    1.0249440009300947e+00,
    1.0415708247702815e+00,
    1.0583686972065971e+00,
    1.0753368753066415e+00,
    1.0924745675654597e+00,
    1.1097809352767705e+00,
    1.1272550939859229e+00,
    1.1448961150199333e+00,
    1.1627030270897452e+00,
    1.1806748179590070e+00,
    1.1988104361739431e+00,
    1.2171087928479709e+00,
    1.2355687634946806e+00,
    1.2541891899025792e+00,
    1.2729688820444558e+00,
    1.2919066200145251e+00,
    1.3110011559858261e+00,
    1.3302512161806597e+00,
    1.3496555028466091e+00,
    1.3692126962308588e+00,
    1.3889214565452601e+00,
    1.4087804259151806e+00,
    1.4287882303050417e+00,
    1.4489434814135116e+00,
    1.4692447785322997e+00,
    1.4896907103618746e+00,
    1.5102798567785873e+00,
    1.5310107905477350e+00,
    1.5518820789776324e+00,
    1.5728922855101928e+00,
    1.5940399712442677e+00,
    1.6153236963882343e+00,
    1.6367420216391162e+00,
    1.6582935094860431e+00,
    1.6799767254363465e+00,
    1.7017902391633077e+00,
    1.7237326255751135e+00,
    1.7458024658049691e+00,
    1.7679983481231609e+00,
    1.7903188687719780e+00,
    1.8127626327252946e+00,
    1.8353282543746889e+00,
    1.8580143581445494e+00,
    1.8808195790389410e+00,
    1.9037425631233198e+00,
    1.9267819679443070e+00,
    1.9499364628910394e+00,
    1.9732047295019255e+00,
    1.9965854617201426e+00,
    2.0200773661021616e+00,
    2.0436791619826007e+00,
    2.0673895815995484e+00,
    2.0912073701838114e+00,
    2.1151312860156350e+00,
    2.1391601004524770e+00,
    2.1632925979309032e+00,
    2.1875275759457624e+00,
    2.2118638450095647e+00,
    2.2363002285945051e+00,
    2.2608355630598336e+00,
    2.2854686975666052e+00,
    2.3101984939818747e+00,
    2.3350238267741332e+00,
    2.3599435829015549e+00,
    2.3849566616944644e+00,
    2.4100619747332477e+00,
    2.4352584457227451e+00,
    2.4605450103640187e+00,
    2.4859206162242673e+00,
    2.5113842226055452e+00,
    2.5369348004127277e+00,
    2.5625713320213555e+00,
    2.5882928111453865e+00,
    2.6140982427055199e+00,
    2.6399866426980108e+00,
    2.6659570380643061e+00,
    2.6920084665615338e+00,
    2.7181399766341068e+00,
    2.7443506272863232e+00,
    2.7706394879561405e+00,
    2.7970056383900852e+00,
    2.8234481685193815e+00,
    2.8499661783372217e+00,
    2.8765587777773645e+00,
    2.9032250865937339e+00,
    2.9299642342413419e+00,
    2.9567753597583613e+00,
    2.9836576116493312e+00,
    3.0106101477694942e+00,
    3.0376321352102913e+00,
    3.0647227501859717e+00,
    3.0918811779212172e+00,
    3.1191066125399489e+00,
    3.1463982569550932e+00,
    3.1737553227593649e+00,
    3.2011770301172060e+00,
    3.2286626076574816e+00,
    3.2562112923673894e+00,
    3.2838223294870872e+00,
    3.3114949724054394e+00,
    3.3392284825565843e+00,
    3.3670221293173102e+00,
    3.3948751899054743e+00,
    3.4227869492790912e+00,
    3.4507567000363375e+00,
    3.4787837423163079e+00,
    3.5068673837005919e+00,
    3.5350069391154788e+00,
    3.5632017307351180e+00,
    3.5914510878850825e+00,
    3.6197543469468672e+00,
    3.6481108512628726e+00,
    3.6765199510421152e+00,
    3.7049810032664503e+00,
    3.7334933715974206e+00,
    3.7620564262836362e+00,
    3.7906695440686580e+00,
    3.8193321080993350e+00,
    3.8480435078346442e+00,
    3.8768031389549646e+00,
    3.9056104032716279e+00,
    3.9344647086369253e+00,
    3.9633654688544029e+00,
    3.9923121035894091e+00,
    4.0213040382799177e+00,
    4.0503407040475210e+00,
    4.0794215376085843e+00,
    4.1085459811855287e+00,
    4.1377134824181638e+00,
    4.1669234942750570e+00,
    4.1961754749648241e+00,
    4.2254688878473932e+00,
    4.2548032013450641e+00,
    4.2841778888534474e+00,
    4.3135924286519804e+00,
    4.3430463038142921e+00,
    4.3725390021180139e+00,
    4.4020700159541786e+00,
    4.4316388422360093e+00,
    4.4612449823070879e+00,
    4.4908879418487304e+00,
    4.5205672307865115e+00,
    4.5502823631958549e+00,
    4.5800328572065050e+00,
    4.6098182349057462e+00,
    4.6396380222403222e+00,
    4.6694917489167471e+00,
    4.6993789482999375e+00,
    4.7292991573099190e+00,
    4.7592519163162796e+00,
    4.7892367690302757e+00,
    4.8192532623939925e+00,
    4.8493009464663768e+00,
    4.8793793743053975e+00,
    4.9094881018458754e+00,
    4.9396266877719412e+00,
    4.9697946933832213e+00,
    4.9999916824532153e+00,
    5.0302172210781659e+00,
    5.0604708775140370e+00,
    5.0907522219985637e+00,
    5.1210608265547197e+00,
    5.1513962647704066e+00,
    5.1817581115483744e+00,
    5.2121459428184682e+00,
    5.2425593352024036e+00,
    5.2729978656191347e+00,
    5.3034611108159124e+00,
    5.3339486468073396e+00,
    5.3644600482007760e+00,
    5.3949948873828024e+00,
    5.4255527335367759e+00,
    5.4561331514567488e+00,
    5.4867357001178902e+00,
    5.5173599309581576e+00,
    5.5480053858203915e+00,
    5.5786715944986573e+00,
    5.6093580718273390e+00,
    5.6400643142466445e+00,
    5.6707897957741125e+00,
    5.7015339633084396e+00,
    5.7322962311899319e+00,
    5.7630759749412164e+00,
    5.7938725241132190e+00,
    5.8246851541642730e+00,
    5.8555130773058961e+00,
    5.8863554322560825e+00,
    5.9172112728516968e+00,
    5.9480795554838881e+00,
    5.9789591253361536e+00,
    6.0098487014224204e+00,
    6.0407468604427308e+00,
    6.0716520194962840e+00,
    6.1025624177157258e+00,
    6.1334760969117195e+00,
    6.1643908813429311e+00,
    6.1953043567528843e+00,
    6.2262138488412253e+00,
    6.2571164013616007e+00,
    6.2880087540618330e+00,
    6.3188873207028369e+00,
    6.3497481674109029e+00,
    6.3805869916322528e+00,
    6.4113991019697316e+00,
    6.4421793991872658e+00,
    6.4729223586697398e+00,
    6.5036220146219801e+00,
    6.5342719462822512e+00,
    6.5648652664115881e+00,
    6.5953946123017584e+00,
    6.6258521395211032e+00,
    6.6562295185903082e+00,
    6.6865179347493457e+00,
    6.7167080909434294e+00,
    6.7467902141200673e+00,
    6.7767540648921463e+00,
    6.8065889505835626e+00,
    6.8362837416354676e+00,
    6.8658268913138825e+00,
    6.8952064586240480e+00,
    6.9244101343056066e+00,
    6.9534252697548649e+00,
    6.9822389086975507e+00,
    7.0108378214155840e+00,
    7.0392085413153396e+00,
    7.0673374036109378e+00,
    7.0952105858855692e+00,
    7.1228141502855502e+00,
    7.1501340870963519e+00,
    7.1771563594452594e+00,
    7.2038669488696767e+00,
    7.2302519014826023e+00,
    7.2562973744566905e+00,
    7.2819896825388000e+00,
    7.3073153443015695e+00,
    7.3322611278426733e+00,
    7.3568140956596899e+00,
    7.3809616484622920e+00,
    7.4046915677352532e+00,
    7.4279920569354925e+00,
    7.4508517812917399e+00,
    7.4732599062688205e+00,
    7.4952061348462982e+00,
    7.5166807438232066e+00,
    7.5376746193729014e+00,
    7.5581792920125235e+00,
    7.5781869710053646e+00,
    7.5976905779805062e+00,
    7.6166837792502982e+00,
    7.6351610159727503e+00,
    7.6531175310060950e+00,
    7.6705493911183975e+00,
    7.6874535032338498e+00,
    7.7038276236936092e+00,
    7.7196703601181555e+00,
    7.7349811663520809e+00,
    7.7497603320410686e+00,
    7.7640089694393666e+00,
    7.7777290008110942e+00,
    7.7909231499825813e+00,
    7.8035949409804344e+00,
    7.8157487051327825e+00,
    7.8273895956077739e+00,
    7.8385236054631324e+00,
    7.8491575824904274e+00,
    7.8592992322419732e+00,
    7.8689571004248000e+00,
    7.8781405279180268e+00,
    7.8868595761420952e+00,
    7.8951249268568393e+00,
    7.9029477674610691e+00,
    7.9103396787131288e+00,
    7.9173125444856609e+00,
    7.9238785010439088e+00,
    7.9300499357005689e+00,
    7.9358395323664928e+00,
    7.9412603470340066e+00,
    7.9463258835738646e+00,
    7.9510501338689483e+00,
    7.9554475497925257e+00,
    7.9595329289841628e+00,
    7.9633212194787308e+00,
    7.9668272742928616e+00,
    7.9700656081560837e+00,
    7.9730502167368593e+00,
    7.9757945085751460e+00,
    7.9783113711316114e+00,
    7.9806133511016117e+00,
    7.9827128878523066e+00,
    7.9846225130476967e+00,
    7.9863549319877265e+00,
    7.9879229364321196e+00,
    7.9893391556030648e+00,
    7.9906157122980224e+00,
    7.9917638922802459e+00,
    7.9927939403768455e+00,
    7.9937150601281539e+00,
    7.9945356234465610e+00,
    7.9952635151568039e+00,
    7.9959064777509239e+00,
    7.9964723153044348e+00,
    7.9969688719850662e+00,
    7.9974037969725424e+00,
    7.9977841988584402e+00,
    7.9981163382129781e+00,
    7.9984054907000344e+00,
    7.9986560428288849e+00,
    7.9988717823489814e+00,
    7.9990562543408767e+00,
    7.9992130205804139e+00,
    7.9993457123566527e+00,
    7.9994578793429740e+00,
    7.9995527387882293e+00,
    7.9996329642784705e+00,
    7.9997006187288697e+00,
    7.9997572614965033e+00,
    7.9998041739224197e+00,
    7.9998425846892198e+00,
    7.9998737799730826e+00,
    7.9998990635721823e+00,
    7.9999196277208942e+00,
    7.9999364320858755e+00,
    7.9999501599440510e+00,
    7.9999612684344967e+00,
    7.9999701004422974e+00,
    7.9999769908073235e+00,
    7.9999823063368849e+00,
    7.9999864146426720e+00,
    7.9999896277701072e+00,
    7.9999921669697116e+00,
    7.9999941657926312e+00,
    7.9999957043834993e+00,
    7.9999968517899349e+00,
    7.9999976881501391e+00,
    7.9999982981283795e+00,
    7.9999987529622736e+00,
    7.9999990999262609e+00,
    7.9999993639908311e+00,
    7.9999995579245313e+00,
    7.9999996934594861e+00,
    7.9999997854976579e+00,
    7.9999998489295692e+00,
    7.9999998946399460e+00,
    7.9999999285266599e+00,
    7.9999999530053421e+00,
    7.9999999694776252e+00,
    7.9999999798974075e+00,
    7.9999999864986950e+00,
    7.9999999909613795e+00,
    7.9999999941613522e+00,
    7.9999999964064044e+00,
    7.9999999978321412e+00,
    7.9999999986581818e+00,
    7.9999999991401269e+00,
    7.9999999994517861e+00,
    7.9999999996697877e+00,
    7.9999999998141629e+00,
    7.9999999998963274e+00,
    7.9999999999387787e+00,
    7.9999999999623190e+00,
    7.9999999999776499e+00,
    7.9999999999880096e+00,
    7.9999999999939675e+00,
    7.9999999999967910e+00,
    7.9999999999981330e+00,
    7.9999999999989209e+00,
    7.9999999999994484e+00,
    7.9999999999997495e+00,
    7.9999999999998810e+00,
    7.9999999999999343e+00,
    7.9999999999999636e+00,
    7.9999999999999831e+00,
    7.9999999999999929e+00,
    7.9999999999999973e+00,
    7.9999999999999982e+00,
    7.9999999999999991e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
    8.0000000000000000e+00,
};

}  // namespace fhsim::bbu::detail
