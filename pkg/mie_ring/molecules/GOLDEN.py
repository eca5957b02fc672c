"""
Golden values as printed, see sources.txt.

Energy rows: molecule, n, n_tilde, m, then the pair printed under the Kratzer-Fues header
(eta = 0, eta = 10) and the pair printed under the modified Kratzer header (eta = 0, eta = 10).
Fisher rows: molecule, n, n_tilde, m, eta = 1, eta = 10.
"""

HYDRIDE_ENERGIES_profile: str = """ScH	0	0	0	0.038550865177	0.047136152697	-2.2114491348232	-2.2028638473033
ScH	1	1	0	0.113671329873	0.125714585463	-2.1363286701273	-2.1242854145369
ScH	3	2	1	0.256230689466	0.268233669609	-1.9937693105341	-1.9817663303913
ScH	3	3	2	0.266251159238	0.278465230223	-1.9837488407615	-1.9715347697774
ScH	5	4	3	0.402000580881	0.412961553329	-1.8479994191190	-1.8370384466709
ScH	5	5	4	0.418711228529	0.429403117956	-1.8312887714706	-1.8205968820436
TiH	0	0	0	0.036655640099	0.045168566558	-2.0133443599005	-2.0048314334419
TiH	1	1	0	0.108000940853	0.119913313679	-1.9419990591474	-1.9300866863210
TiH	3	2	1	0.243080026941	0.254896743640	-1.8069199730593	-1.7951032563601
TiH	3	3	2	0.252945869484	0.264959557387	-1.7970541305156	-1.7850404426131
TiH	5	4	3	0.381216441946	0.391943093793	-1.6687835580542	-1.6580569062067
TiH	5	5	4	0.397565414203	0.408012370407	-1.6524345857975	-1.6419876295931
VH	0	0	0	0.040485742451	0.049627192146	-2.2895142575488	-2.2803728078539
VH	1	1	0	0.119347125450	0.132160333302	-2.2106528745497	-2.1978396666983
VH	3	2	1	0.268892560856	0.281643439466	-2.0611074391435	-2.0483565605342
VH	3	3	2	0.279537700760	0.292509080072	-2.0504622992403	-2.0374909199277
VH	5	4	3	0.421812439293	0.433433943863	-1.9081875607066	-1.8965660561375
VH	5	5	4	0.439528566580	0.450859092026	-1.8904714334202	-1.8791409079739
CrH	0	0	0	0.039240240805	0.048624500805	-2.0907597591951	-2.0813754991953
CrH	1	1	0	0.115552366272	0.128660509524	-2.0144476337276	-2.0013394904763
CrH	3	2	1	0.259790220955	0.272748672279	-1.8702097790448	-1.8572513277214
CrH	3	3	2	0.270610020743	0.283775564629	-1.8593899792566	-1.8462244353706
CrH	5	4	3	0.407298458878	0.419010312065	-1.7227015411220	-1.7109896879354
CrH	5	5	4	0.425145398908	0.436538532777	-1.7048546010919	-1.6934614672227
MnH	0	0	0	0.033530790717	0.042255441370	-1.6364692092834	-1.6277445586296
MnH	1	1	0	0.098573057609	0.110692944784	-1.5714269423906	-1.5593070552162
MnH	3	2	1	0.220872295867	0.232728799779	-1.4491277041331	-1.4372712002212
MnH	3	3	2	0.230774127351	0.242793864141	-1.4392258726494	-1.4272061358594
MnH	5	4	3	0.345933039783	0.356505250760	-1.3240669602166	-1.3134947492397
MnH	5	5	4	0.362032877937	0.372278898839	-1.3079671220633	-1.2977211011611
"""

COMPOUND_ENERGIES_profile: str = """CuLi	0	0	0	0.0104034334499	0.0112193128191	-1.7295965665511	-1.7287806871810
CuLi	1	1	0	0.0310236977854	0.0322097676182	-1.7089763022112	-1.7077902323822
CuLi	3	2	1	0.0715256951737	0.0727926204946	-1.6684743048241	-1.6672073795052
CuLi	3	3	2	0.0725824257022	0.0738833830266	-1.6674175742921	-1.6661166169733
CuLi	5	4	3	0.1125295661480	0.1137856501370	-1.6274704338510	-1.6262143498631
CuLi	5	5	4	0.1144499032560	0.1156950666010	-1.6255500967440	-1.6243049333992
TiC	0	0	0	0.0134061298914	0.0142929020972	-2.6465938701111	-2.6457070979031
TiC	1	1	0	0.0400156956550	0.0413085784107	-2.6199843043520	-2.6186914215897
TiC	3	2	1	0.0924312554655	0.0938202181407	-2.5675687445542	-2.5661797818594
TiC	3	3	2	0.0935897338979	0.0950165389951	-2.5664102661090	-2.5649834610052
TiC	5	4	3	0.1454118148830	0.1467975683050	-2.5145881851201	-2.5132024316952
TiC	5	5	4	0.1475306446650	0.1489052861950	-2.5124693553410	-2.5110947138057
NiC	0	0	0	0.0147961835646	0.0158370326602	-2.7452038164351	-2.7441629673411
NiC	1	1	0	0.0441505899397	0.0456666063198	-2.7158494100600	-2.7143333936801
NiC	3	2	1	0.1019165604800	0.1035420518290	-2.6580834395201	-2.6564579481711
NiC	3	3	2	0.1032723340490	0.1049419108420	-2.6567276659510	-2.6550580891581
NiC	5	4	3	0.1603378369410	0.1619561134520	-2.5996621630591	-2.5980438865482
NiC	5	5	4	0.1628121021450	0.1644170486870	-2.5971878978550	-2.5955829513131
ScN	0	0	0	0.0168631835648	0.0176823303543	-4.5431368164352	-4.5423176696457
ScN	1	1	0	0.0504024684497	0.0516016960662	-4.5095975315503	-4.5083983039338
ScN	3	2	1	0.1167375787850	0.1180364898220	-4.4432624212149	-4.4419635101781
ScN	3	3	2	0.1178209037540	0.1191557698630	-4.442179096246	-4.4408442301365
ScN	5	4	3	0.1836207374740	0.1849280869560	-4.3763792625259	-4.3750719130435
ScN	5	5	4	0.1856199563870	0.1869178309770	-4.3743800436129	-4.3730821690228
ScF	0	0	0	0.0168395069607	0.0174765372110	-5.8331604930393	-5.8325234627890
ScF	1	1	0	0.0503731014881	0.0513080511121	-5.7996268985119	-5.7986919488879
ScF	3	2	1	0.1168615557170	0.1178792669520	-5.7331384442834	-5.7321207330480
ScF	3	3	2	0.1177103366210	0.1187564236550	-5.7322896633789	-5.7312435763445
ScF	5	4	3	0.1837887951430	0.1848185187380	-5.6662112048568	-5.6651814812623
ScF	5	5	4	0.1853635624850	0.1863861908680	-5.6646364375148	-5.6636138091316
"""

FISHER_ENTROPIES_profile: str = """ScH	0	0	0	-0.681899887587	-0.213093419123
ScH	1	1	0	-0.607144881351	-0.188917645709
ScH	3	2	1	-0.341956148619	-0.143113454286
ScH	3	3	2	-0.212470375401	-0.124510654407
ScH	5	4	3	-0.118677955570	-0.084468903166
ScH	5	5	4	-0.088094902331	-0.069901537700
TiH	0	0	0	-0.574697197357	-0.179461701496
TiH	1	1	0	-0.509851692536	-0.158488149380
TiH	3	2	1	-0.285178358925	-0.119218181398
TiH	3	3	2	-0.177004627458	-0.103606596608
TiH	5	4	3	-0.098142306215	-0.069775317718
TiH	5	5	4	-0.072713559835	-0.057634241562
VH	0	0	0	-0.749483394279	-0.234207036835
VH	1	1	0	-0.667230790564	-0.207606407307
VH	3	2	1	-0.375702001165	-0.157230198615
VH	3	3	2	-0.233428975391	-0.136786905508
VH	5	4	3	-0.130349292522	-0.092772223552
VH	5	5	4	-0.096751899828	-0.076767661725
CrH	0	0	0	-0.673218403489	-0.210063874680
CrH	1	1	0	-0.595029626435	-0.184772322300
CrH	3	2	1	-0.330448677958	-0.137979874288
CrH	3	3	2	-0.204872456584	-0.119770532673
CrH	5	4	3	-0.11273096192o	-0.080053272878
CrH	5	5	4	-0.0833551495839	-0.065993263101
MnH	0	0	0	-0.434698318885	-0.135297550767
MnH	1	1	0	-0.379837003305	-0.117550623776
MnH	3	2	1	-0.206377377633	-0.085845284406
MnH	3	3	2	-0.127487339584	-0.074234730389
MnH	5	4	3	-0.068529861587	-0.048482256122
MnH	5	5	4	-0.050348153433	-0.039715438520
CuLi	0	0	0	-4.430031245300	-1.398937573470
CuLi	1	1	0	-4.259482255690	-1.344365852550
CuLi	3	2	1	-2.785981994730	-1.185236405610
CuLi	3	3	2	-1.758191502840	-1.048191952690
CuLi	5	4	3	-1.148675272420	-0.831331357338
CuLi	5	5	4	-0.877363231883	-0.707740395896
TiC	0	0	0	-26.58864033183	-8.399704277931
TiC	1	1	0	-25.72448824362	-8.123628922161
TiC	3	2	1	-17.03336998411	-7.251248387582
TiC	3	3	2	-10.75621884151	-6.417048285671
TiC	5	4	3	-7.116418770230	-5.153923527921
TiC	5	5	4	-5.441981377200	-4.392887202110
NiC	0	0	0	-36.22001392321	-11.44088436361
NiC	1	1	0	-34.96849519112	-11.04083573651
NiC	3	2	1	-23.05729723281	-9.813600035213
NiC	3	3	2	-14.55726663640	-8.682768966150
NiC	5	4	3	-9.589907385391	-6.943748569551
NiC	5	5	4	-7.330673924481	-5.916165955761
ScN	0	0	0	-72.03797020391	-22.76821398991
ScN	1	1	0	-70.31634363684	-22.21952806162
ScN	3	2	1	-47.38281312491	-20.18635563561
ScN	3	3	2	-29.94252640000	-17.87749965170
ScN	5	4	3	-20.16790632931	-14.61771561520
ScN	5	5	4	-15.44340004458	-12.47604964143
ScF	0	0	0	-142.5239497331	-45.05541946543
ScF	1	1	0	-139.8691771984	-44.21067895437
ScF	3	2	1	-95.26420372882	-40.59913277345
ScF	3	3	2	-60.21986000100	-35.96799843241
ScF	5	4	3	-41.00435950272	-29.73084478700
ScF	5	5	4	-31.41838634100	-25.39078794301
"""
